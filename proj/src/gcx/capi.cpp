#include "gcx.h"

#include "gcx/biweight.hpp"
#include "gcx/chainmaps.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/gcomplex.hpp"
#include "gcx/grtwitness.hpp"
#include "gcx/homology.hpp"

#include <cstring>
#include <string>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
int guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GCX_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GCX_EFAIL;
    }
}

std::vector<gcx::Graph> flavor_classes(const gcx::Flavor& f, int v, int e) {
    using namespace gcx;
    EnumConstraints c;
    if (f.sym() == Sym::Undirected) {
        if (f.base == Flavor::GC) {
            c.allow_tadpoles = false;
            c.min_total_valence = 3;
        } else if (f.base == Flavor::b2GC) {
            c.all_bivalent = true;
        }
    } else if (f.base != Flavor::cfdGC) {
        c.no_univalent = true;
        c.forbid_passing = true;
        c.require_some_trivalent = true;
    }
    std::vector<Graph> pool = f.sym() == Sym::Undirected ? enumerate_shapes(v, e, c)
                                                         : enumerate_directed(v, e, c);
    std::vector<Graph> out;
    for (const Graph& g : pool) {
        if (!f.admits(g)) continue;
        Canon cn = canonicalize(g, f.parity(), f.sym());
        if (!cn.zero) out.push_back(cn.rep);
    }
    return out;
}

} // namespace

extern "C" {

void gcx_free_string(char* s) { delete[] s; }

const char* gcx_last_error(void) { return g_last_error.c_str(); }

int gcx_enumerate(const char* flavor, int k, int v, int e, char** out_text, long* count) {
    return guarded([&] {
        if (!flavor || !out_text || !count || v < 1 || e < 0)
            throw std::invalid_argument("gcx_enumerate: bad arguments");
        gcx::Flavor f = gcx::Flavor::parse(flavor, k);
        std::vector<gcx::Graph> classes = flavor_classes(f, v, e);
        std::string text;
        for (const gcx::Graph& g : classes) {
            text += gcx::format_graph(g);
            text += '\n';
        }
        *out_text = dup_string(text);
        *count = (long)classes.size();
        return GCX_OK;
    });
}

int gcx_differential(const char* flavor, int k, const char* graph_text, char** out_json) {
    return guarded([&] {
        if (!flavor || !graph_text || !out_json)
            throw std::invalid_argument("gcx_differential: bad arguments");
        gcx::Flavor f = gcx::Flavor::parse(flavor, k);
        gcx::Graph g = gcx::parse_graph(graph_text);
        *out_json = dup_string(gcx::lincomb_to_json(gcx::differential(g, f)));
        return GCX_OK;
    });
}

int gcx_cohomology(const char* flavor, int k, int b, int dmin, int dmax, const char* sms_dir,
                   char** out_json) {
    return guarded([&] {
        if (!flavor || !out_json || dmin > dmax)
            throw std::invalid_argument("gcx_cohomology: bad arguments");
        gcx::Flavor f = gcx::Flavor::parse(flavor, k);
        gcx::CohomologyReport r =
            gcx::cohomology_dims(f, b, dmin, dmax, sms_dir ? sms_dir : "");
        *out_json = dup_string(gcx::cohomology_report_to_json(r));
        return GCX_OK;
    });
}

int gcx_verify_d2(const char* flavor, int k, int v_max, int e_max, int* pass) {
    return guarded([&] {
        if (!flavor || !pass) throw std::invalid_argument("gcx_verify_d2: bad arguments");
        gcx::Flavor f = gcx::Flavor::parse(flavor, k);
        *pass = 1;
        long checked = 0;
        for (int v = 1; v <= v_max; ++v)
            for (int e = 0; e <= e_max; ++e)
                for (const gcx::Graph& g : flavor_classes(f, v, e)) {
                    ++checked;
                    if (!gcx::differential(gcx::differential(g, f), f).is_zero()) {
                        *pass = 0;
                        return GCX_OK;
                    }
                }
        if (checked == 0) throw std::invalid_argument("gcx_verify_d2: empty window");
        return GCX_OK;
    });
}

int gcx_verify_chainmap(const char* name, int k, int v_max, int e_max, char** out_json) {
    return guarded([&] {
        if (!name || !out_json)
            throw std::invalid_argument("gcx_verify_chainmap: bad arguments");
        gcx::ChainMapReport r = gcx::verify_chain_map(name, k, v_max, e_max);
        *out_json = dup_string(gcx::chain_map_report_to_json(r));
        return GCX_OK;
    });
}

int gcx_grt_report(const char* sms_dir, char** out_json) {
    return guarded([&] {
        if (!out_json) throw std::invalid_argument("gcx_grt_report: bad arguments");
        gcx::GrtReport r = gcx::run_tetrahedron_witness(sms_dir ? sms_dir : "");
        *out_json = dup_string(gcx::grt_report_to_json(r));
        return GCX_OK;
    });
}

int gcx_grt_derivation(const char* kind, int m, int n, char** out_json) {
    return guarded([&] {
        if (!kind || !out_json || m < 1 || n < 1 ||
            (std::strcmp(kind, "s") != 0 && std::strcmp(kind, "t") != 0))
            throw std::invalid_argument("gcx_grt_derivation: bad arguments");
        *out_json = dup_string(gcx::render_derivation(kind[0], m, n));
        return GCX_OK;
    });
}

int gcx_holieb_degree(const char* graph_text, int p, int q, int* degree) {
    return guarded([&] {
        if (!graph_text || !degree)
            throw std::invalid_argument("gcx_holieb_degree: bad arguments");
        gcx::Graph g = gcx::parse_graph(graph_text);
        *degree = gcx::holieb_degree(g, p, q);
        return GCX_OK;
    });
}

} // extern "C"
