#include "homology.hpp"

#include "enumerate.hpp"
#include "gcomplex.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

namespace gcx {

namespace {

EnumConstraints flavor_constraints(const Flavor& f) {
    EnumConstraints c;
    switch (f.base) {
    case Flavor::cfGC:
    case Flavor::cfdGC: break;
    case Flavor::GC:
        c.allow_tadpoles = false;
        c.min_total_valence = 3;
        break;
    case Flavor::b2GC: c.all_bivalent = true; break;
    case Flavor::dGC:
    case Flavor::dGC_s:
    case Flavor::dGC_t:
    case Flavor::dGC_st:
    case Flavor::dGC_spt:
    case Flavor::dGC_wheeled:
        c.no_univalent = true;
        c.forbid_passing = true;
        c.require_some_trivalent = true;
        if (f.base == Flavor::dGC_s || f.base == Flavor::dGC_st) c.require_has_source = true;
        if (f.base == Flavor::dGC_t || f.base == Flavor::dGC_st) c.require_has_target = true;
        if (f.base == Flavor::dGC_wheeled) {
            c.require_no_source = true;
            c.require_no_target = true;
        }
        break;
    }
    return c;
}

int worker_count(size_t jobs) {
    long n = 0;
    if (const char* env = std::getenv("GCX_THREADS")) n = std::atol(env);
    if (n <= 0) n = std::thread::hardware_concurrency();
    if (n <= 0) n = 1;
    if ((size_t)n > jobs) n = jobs;
    return (int)n;
}

} // namespace

GradedBasis build_basis(const Flavor& f, int b, int d) {
    GradedBasis out;
    out.flavor = f;
    out.b = b;
    out.d = d;
    out.v = d + (f.k - 1) * b + 1;
    out.e = out.v + b - 1;
    if (out.v < 1 || out.e < 0) return out;
    EnumConstraints c = flavor_constraints(f);
    std::vector<Graph> pool = f.sym() == Sym::Undirected
                                  ? enumerate_shapes(out.v, out.e, c)
                                  : enumerate_directed(out.v, out.e, c);
    std::map<std::string, Graph> classes;
    for (const Graph& g : pool) {
        if (!f.admits(g)) continue;
        Canon cn = canonicalize(g, f.parity(), f.sym());
        if (cn.zero) continue;
        classes.emplace(cn.key, cn.rep);
    }
    for (auto& [key, rep] : classes) {
        out.keys.push_back(key);
        out.reps.push_back(rep);
    }
    return out;
}

SparseMatrix differential_matrix(const GradedBasis& from, const GradedBasis& to) {
    const Flavor& f = from.flavor;
    if (to.d != from.d + 1 || to.b != from.b)
        throw std::invalid_argument("differential_matrix: bases are not consecutive");
    SparseMatrix m;
    m.n_rows = (int)to.keys.size();
    m.n_cols = (int)from.keys.size();
    m.row_basis = to.keys;
    m.col_basis = from.keys;
    if (m.n_rows == 0 || m.n_cols == 0) return m;
    std::map<std::string, int> row_of;
    for (int r = 0; r < m.n_rows; ++r) row_of[to.keys[r]] = r;

    int nw = worker_count(from.keys.size());
    std::vector<std::vector<std::tuple<int, int, Rat>>> parts(nw);
    std::vector<std::string> errors(nw);
    auto work = [&](int w) {
        try {
            for (int col = w; col < m.n_cols; col += nw) {
                LinComb dc = differential(from.reps[col], f);
                for (auto& [key, t] : dc.terms) {
                    auto it = row_of.find(key);
                    if (it == row_of.end())
                        throw std::logic_error("differential term outside target basis: " + key);
                    parts[w].emplace_back(it->second, col, t.c);
                }
            }
        } catch (const std::exception& ex) {
            errors[w] = ex.what();
        }
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
        if (!err.empty()) throw std::logic_error(err);
    for (auto& part : parts)
        for (auto& tr : part) m.triplets.push_back(tr);
    return m;
}

CohomologyReport cohomology_dims(const Flavor& f, int b, int dmin, int dmax,
                                 const std::string& sms_dir) {
    CohomologyReport rep;
    rep.flavor = f;
    rep.b = b;
    std::map<int, GradedBasis> bases;
    for (int d = dmin - 1; d <= dmax + 1; ++d) bases[d] = build_basis(f, b, d);
    std::map<int, long> rank_at; // rank of d : C_d -> C_{d+1}
    for (int d = dmin - 1; d <= dmax; ++d) {
        SparseMatrix m = differential_matrix(bases[d], bases[d + 1]);
        rank_at[d] = rank_sparse(m);
        if (!sms_dir.empty() && m.n_rows > 0 && m.n_cols > 0) {
            std::string path = sms_dir + "/" + f.name() + "_k" + std::to_string(f.k) + "_b" +
                               std::to_string(b) + "_d" + std::to_string(d) + ".sms";
            std::ofstream(path) << export_sms(m);
        }
    }
    for (int d = dmin; d <= dmax; ++d) {
        DegreeReport row;
        row.d = d;
        row.dim = (long)bases[d].keys.size();
        row.rank_out = rank_at[d];
        row.rank_in = rank_at[d - 1];
        row.h = row.dim - row.rank_out - row.rank_in;
        if (row.h < 0) throw std::logic_error("negative cohomology dimension");
        rep.rows.push_back(row);
    }
    return rep;
}

std::string cohomology_report_to_json(const CohomologyReport& r) {
    nlohmann::ordered_json j;
    j["flavor"] = r.flavor.name();
    j["k"] = r.flavor.k;
    j["b"] = r.b;
    j["degrees"] = nlohmann::ordered_json::array();
    for (auto& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["d"] = row.d;
        jr["dim"] = row.dim;
        jr["rank_out"] = row.rank_out;
        jr["rank_in"] = row.rank_in;
        jr["h"] = row.h;
        j["degrees"].push_back(jr);
    }
    return j.dump(2);
}

} // namespace gcx
