#ifndef GCX_FLAVOR_HPP
#define GCX_FLAVOR_HPP

#include "canon.hpp"

namespace gcx {

// Complex flavors:
//   cfGC  — full undirected complex (any connected graph)
//   GC    — undirected, all vertices >= trivalent, no tadpoles
//   b2GC  — undirected, all vertices bivalent (loop graphs)
//   cfdGC — full directed complex
//   dGC   — directed, no univalent, no passing, >= 1 vertex of valence >= 3
//   dGC_s / dGC_t / dGC_st / dGC_spt — subcomplexes of dGC with a source /
//       a target / both / at least one of the two
//   dGC_wheeled — quotient of dGC by dGC_spt; generators have neither source
//       nor target, and differential terms acquiring one are projected away
struct Flavor {
    enum Base { cfGC, GC, b2GC, cfdGC, dGC, dGC_s, dGC_t, dGC_st, dGC_spt, dGC_wheeled };
    Base base;
    int k;

    Parity parity() const { return parity_of(k); }
    Sym sym() const {
        return (base == cfGC || base == GC || base == b2GC) ? Sym::Undirected : Sym::Directed;
    }
    bool is_quotient() const { return base == dGC_wheeled; }

    bool admits(const Graph& g) const {
        switch (base) {
        case cfGC:
        case cfdGC: return true;
        case GC: {
            for (auto& [t, h] : g.edges)
                if (t == h) return false;
            for (int x = 0; x < g.v; ++x)
                if (valence(g, x) < 3) return false;
            return true;
        }
        case b2GC: {
            for (int x = 0; x < g.v; ++x)
                if (valence(g, x) != 2) return false;
            return true;
        }
        default: {
            bool some3 = false;
            for (int x = 0; x < g.v; ++x) {
                VertexClass c = classify_vertex(g, x);
                if (c == VertexClass::UnivalentIn || c == VertexClass::UnivalentOut ||
                    c == VertexClass::Passing)
                    return false;
                if (valence(g, x) >= 3) some3 = true;
            }
            if (!some3) return false;
            switch (base) {
            case dGC: return true;
            case dGC_s: return has_source(g);
            case dGC_t: return has_target(g);
            case dGC_st: return has_source(g) && has_target(g);
            case dGC_spt: return has_source(g) || has_target(g);
            case dGC_wheeled: return !has_source(g) && !has_target(g);
            default: return false;
            }
        }
        }
    }

    // For the quotient flavor: true if the term lies in the killed subcomplex.
    bool projected_out(const Graph& g) const {
        return base == dGC_wheeled && (has_source(g) || has_target(g));
    }

    std::string name() const {
        static const char* names[] = {"cfGC",  "GC",    "b2GC",   "cfdGC",  "dGC",
                                      "dGCs",  "dGCt",  "dGCst",  "dGCs+t", "dGCwheel"};
        return names[(int)base];
    }

    static Flavor parse(const std::string& s, int k);
};

} // namespace gcx

#endif
