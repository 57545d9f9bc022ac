#include "chainmaps.hpp"

#include "enumerate.hpp"
#include "gcomplex.hpp"

#include "json.hpp"

#include <stdexcept>

namespace gcx {

namespace {

bool has_univalent(const Graph& g) {
    for (int x = 0; x < g.v; ++x) {
        VertexClass c = classify_vertex(g, x);
        if (c == VertexClass::UnivalentIn || c == VertexClass::UnivalentOut) return true;
    }
    return false;
}

LinComb project(const LinComb& lc, bool (*killed)(const Graph&)) {
    LinComb out;
    for (auto& [key, t] : lc.terms)
        if (!killed(t.rep)) out.add_canonical(key, t.rep, t.c);
    return out;
}

bool killed_s(const Graph& g) { return has_source(g); }
bool killed_t(const Graph& g) { return has_target(g); }
bool killed_st(const Graph& g) { return has_source(g) && has_target(g); }
bool killed_spt(const Graph& g) { return has_source(g) || has_target(g); }

// projection to the no-univalent quotient M^{*,>=2} / M^{+,>=2}
LinComb drop_univalent(const LinComb& lc) {
    LinComb out;
    for (auto& [key, t] : lc.terms)
        if (!has_univalent(t.rep)) out.add_canonical(key, t.rep, t.c);
    return out;
}

} // namespace

LinComb orient_sum(const Graph& g, int k) {
    if (!g.weights.empty() || !g.decs.empty() || !g.kinds.empty())
        throw std::invalid_argument("orient_sum: plain undirected graphs only");
    Parity p = parity_of(k);
    LinComb out;
    int ne = g.e();
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        Graph h = g;
        int flips = 0;
        bool skip = false;
        for (int i = 0; i < ne; ++i)
            if (mask & (1u << i)) {
                auto& [t, hd] = h.edges[i];
                if (t == hd) { // a tadpole has a single orientation
                    skip = true;
                    break;
                }
                std::swap(t, hd);
                ++flips;
            }
        if (skip) continue;
        // odd parity carries the direction-flip sign of the undirected
        // orientation convention; even parity is direction-blind
        Rat c = (p == Parity::Odd && flips % 2 != 0) ? -1 : 1;
        out.add(h, c, p, Sym::Directed);
    }
    // The splitting differential counts every reattachment mask, so an
    // undirected split appears twice (mask and complement give isomorphic
    // graphs) while its directed counterparts are distinct classes counted
    // once.  The 2^{-v} normalization absorbs exactly that factor per
    // application of the differential and makes the orientation sum a chain
    // map on the nose.
    out *= Rat(1) / Rat(Int(1) << g.v);
    return out;
}

LinComb project_mod_s(const LinComb& lc) { return project(lc, killed_s); }
LinComb project_mod_t(const LinComb& lc) { return project(lc, killed_t); }
LinComb project_mod_st(const LinComb& lc) { return project(lc, killed_st); }
LinComb project_mod_spt(const LinComb& lc) { return project(lc, killed_spt); }

LinComb quotient_differential(const LinComb& lc, int k, Quot q) {
    LinComb d = differential(lc, Flavor{Flavor::dGC, k});
    switch (q) {
    case Quot::None: return d;
    case Quot::ModS: return project_mod_s(d);
    case Quot::ModT: return project_mod_t(d);
    case Quot::ModST: return project_mod_st(d);
    case Quot::ModSPT: return project_mod_spt(d);
    }
    return d;
}

LinComb mplus_differential(const LinComb& lc, int k) {
    return drop_zero_decorated(qgc_differential(lc, k));
}

std::pair<LinComb, LinComb> mplus_differential_split(const LinComb& lc, int k) {
    auto [ds, du] = qgc_differential_split(lc, k);
    return {drop_zero_decorated(ds), drop_zero_decorated(du)};
}

namespace {

LinComb decorate_terms(const LinComb& lc, Mono which, int k) {
    Parity p = parity_of(k);
    LinComb out;
    for (auto& [key, t] : lc.terms) {
        LinComb dec = mono_decorate(t.rep, which, p, which != Mono::Omega);
        dec *= t.c;
        out += dec;
    }
    return out;
}

} // namespace

LinComb map_b(const LinComb& lc, int k) { return decorate_terms(lc, Mono::Omega, k); }
LinComb map_fs(const LinComb& lc, int k) { return decorate_terms(lc, Mono::OutInf, k); }
LinComb map_ft(const LinComb& lc, int k) { return decorate_terms(lc, Mono::InInf, k); }

LinComb map_a(const LinComb& g1, const LinComb& g2, int k) {
    LinComb dec = map_fs(g1, k);
    dec += map_ft(g2, k);
    auto [ds, du] = mplus_differential_split(dec, k);
    (void)ds;
    return du;
}

ConeElement cone_differential(const ConeElement& x, int k) {
    ConeElement out;
    out.g = quotient_differential(x.g, k, Quot::None);
    LinComb p1 = project_mod_s(x.g);
    LinComb p2 = project_mod_t(x.g);
    p1 += quotient_differential(x.g1, k, Quot::ModS);
    p2 += quotient_differential(x.g2, k, Quot::ModT);
    p1 *= -1;
    p2 *= -1;
    out.g1 = p1;
    out.g2 = p2;
    return out;
}

LinComb map_ab(const ConeElement& x, int k) {
    LinComb out = map_b(x.g, k);
    out += map_a(x.g1, x.g2, k);
    return out;
}

namespace {

std::vector<Graph> generators(const Flavor& f, int v_max, int e_max, bool no_source,
                              bool no_target) {
    EnumConstraints c;
    if (f.sym() == Sym::Undirected) {
        c.allow_tadpoles = false;
        c.min_total_valence = 3;
    } else {
        c.no_univalent = true;
        c.forbid_passing = true;
        c.require_some_trivalent = true;
        c.require_no_source = no_source;
        c.require_no_target = no_target;
    }
    std::vector<Graph> out;
    for (int v = 1; v <= v_max; ++v)
        for (int e = 0; e <= e_max; ++e) {
            std::vector<Graph> pool = f.sym() == Sym::Undirected ? enumerate_shapes(v, e, c)
                                                                 : enumerate_directed(v, e, c);
            for (const Graph& g : pool) {
                if (!f.admits(g)) continue;
                Canon cn = canonicalize(g, f.parity(), f.sym());
                if (!cn.zero) out.push_back(cn.rep);
            }
        }
    return out;
}

// the intentional corruption for the negative control: forget the
// InfZero-and-ZeroInf-pair branch of the omega sum's plus condition and keep
// only decorations with at least one InfInf vertex
LinComb map_b_corrupt(const LinComb& lc, int k) {
    LinComb full = decorate_terms(lc, Mono::Omega, k);
    LinComb out;
    for (auto& [key, t] : full.terms) {
        bool has_oo = false;
        for (Dec d : t.rep.decs) has_oo |= d == Dec::InfInf;
        if (has_oo) out.add_canonical(key, t.rep, t.c);
    }
    return out;
}

} // namespace

ChainMapReport verify_chain_map(const std::string& name, int k, int v_max, int e_max) {
    ChainMapReport rep;
    rep.name = name;
    rep.k = k;
    rep.v_max = v_max;
    rep.e_max = e_max;
    Flavor dgc{Flavor::dGC, k};
    Flavor gc{Flavor::GC, k};

    auto record = [&](const Graph& g, bool ok) {
        ++rep.checked;
        if (!ok) rep.witnesses.push_back(canonicalize(g, dgc.parity(), dgc.sym()).key);
    };

    if (name == "f") {
        for (const Graph& g : generators(gc, v_max, e_max, false, false)) {
            LinComb lhs;
            for (auto& [key, t] : differential(g, gc).terms) {
                LinComb o = orient_sum(t.rep, k);
                o *= t.c;
                lhs += o;
            }
            LinComb rhs = differential(orient_sum(g, k), dgc);
            lhs -= rhs;
            ++rep.checked;
            if (!lhs.is_zero())
                rep.witnesses.push_back(canonicalize(g, gc.parity(), gc.sym()).key);
        }
    } else if (name == "b" || name == "b_corrupt") {
        auto apply = name == "b" ? map_b : map_b_corrupt;
        for (const Graph& g : generators(dgc, v_max, e_max, false, false)) {
            LinComb one;
            one.add(g, 1, dgc.parity(), dgc.sym());
            LinComb lhs = apply(differential(one, dgc), k);
            LinComb rhs = drop_univalent(mplus_differential(apply(one, k), k));
            lhs -= rhs;
            record(g, lhs.is_zero());
        }
    } else if (name == "fs" || name == "ft") {
        bool s = name == "fs";
        for (const Graph& g : generators(dgc, v_max, e_max, s, !s)) {
            LinComb one;
            one.add(g, 1, dgc.parity(), dgc.sym());
            LinComb dq = quotient_differential(one, k, s ? Quot::ModS : Quot::ModT);
            LinComb lhs = s ? map_fs(dq, k) : map_ft(dq, k);
            LinComb img = s ? map_fs(one, k) : map_ft(one, k);
            LinComb rhs = drop_univalent(mplus_differential(img, k));
            lhs -= rhs;
            record(g, lhs.is_zero());
        }
    } else if (name == "a") {
        // check both slots; the shifted differential is -d
        for (const Graph& g : generators(dgc, v_max, e_max, true, false)) {
            LinComb one;
            one.add(g, 1, dgc.parity(), dgc.sym());
            LinComb md = quotient_differential(one, k, Quot::ModS);
            md *= -1;
            LinComb lhs = map_a(md, LinComb{}, k);
            LinComb rhs = mplus_differential(map_a(one, LinComb{}, k), k);
            lhs -= rhs;
            record(g, lhs.is_zero());
        }
        for (const Graph& g : generators(dgc, v_max, e_max, false, true)) {
            LinComb one;
            one.add(g, 1, dgc.parity(), dgc.sym());
            LinComb md = quotient_differential(one, k, Quot::ModT);
            md *= -1;
            LinComb lhs = map_a(LinComb{}, md, k);
            LinComb rhs = mplus_differential(map_a(LinComb{}, one, k), k);
            lhs -= rhs;
            record(g, lhs.is_zero());
        }
    } else if (name == "aplusb" || name == "cone") {
        // linearity: the three component inclusions generate the cone
        std::vector<ConeElement> gens;
        for (const Graph& g : generators(dgc, v_max, e_max, false, false)) {
            ConeElement x;
            x.g.add(g, 1, dgc.parity(), dgc.sym());
            gens.push_back(x);
        }
        for (const Graph& g : generators(dgc, v_max, e_max, true, false)) {
            ConeElement x;
            x.g1.add(g, 1, dgc.parity(), dgc.sym());
            gens.push_back(x);
        }
        for (const Graph& g : generators(dgc, v_max, e_max, false, true)) {
            ConeElement x;
            x.g2.add(g, 1, dgc.parity(), dgc.sym());
            gens.push_back(x);
        }
        for (ConeElement& x : gens) {
            ConeElement dx = cone_differential(x, k);
            bool ok;
            if (name == "cone") {
                ok = cone_differential(dx, k).is_zero();
            } else {
                LinComb lhs = map_ab(dx, k);
                lhs -= mplus_differential(map_ab(x, k), k);
                ok = lhs.is_zero();
            }
            ++rep.checked;
            if (!ok) {
                const LinComb& nz = !x.g.is_zero() ? x.g : (!x.g1.is_zero() ? x.g1 : x.g2);
                rep.witnesses.push_back(nz.terms.begin()->first);
            }
        }
    } else {
        throw std::invalid_argument("verify_chain_map: unknown map " + name);
    }
    rep.pass = rep.witnesses.empty() && rep.checked > 0;
    return rep;
}

std::string chain_map_report_to_json(const ChainMapReport& r) {
    nlohmann::ordered_json j;
    j["map"] = r.name;
    j["k"] = r.k;
    j["window"] = {{"v_max", r.v_max}, {"e_max", r.e_max}};
    j["checked"] = r.checked;
    j["pass"] = r.pass;
    j["witnesses"] = r.witnesses;
    return j.dump(2);
}

} // namespace gcx
