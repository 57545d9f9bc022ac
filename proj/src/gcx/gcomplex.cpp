#include "gcomplex.hpp"

#include "enumerate.hpp"

#include <climits>
#include <stdexcept>

namespace gcx {

LinComb vertex_split(const Graph& g, int x, Parity p, Sym s) {
    if (!g.weights.empty() || !g.decs.empty())
        throw std::invalid_argument("vertex_split: weighted/decorated graphs have their own "
                                    "splitting operations");
    // endpoint slots at x: (edge index, 0 = tail side / 1 = head side)
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < g.e(); ++i) {
        if (g.edges[i].first == x) slots.push_back({i, 0});
        if (g.edges[i].second == x) slots.push_back({i, 1});
    }
    LinComb out;
    int nv = g.v;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        Graph h = g;
        h.v = nv + 1;
        for (size_t j = 0; j < slots.size(); ++j)
            if (mask & (1u << j)) {
                auto& [i, side] = slots[j];
                (side == 0 ? h.edges[i].first : h.edges[i].second) = nv;
            }
        h.edges.emplace_back(x, nv); // new edge labeled e+1
        if (!h.kinds.empty()) h.kinds.push_back(EdgeKind::Solid);
        out.add(h, 1, p, s);
    }
    return out;
}

LinComb add_univalent(const Graph& g, int x, bool out_dir, Parity p, Sym s) {
    if (!g.weights.empty() || !g.decs.empty())
        throw std::invalid_argument("add_univalent: weighted/decorated graphs have their own "
                                    "pendant operations");
    Graph h = g;
    h.v = g.v + 1;
    if (out_dir) h.edges.emplace_back(x, g.v);
    else h.edges.emplace_back(g.v, x);
    if (!h.kinds.empty()) h.kinds.push_back(EdgeKind::Solid);
    LinComb out;
    out.add(h, 1, p, s);
    return out;
}

LinComb differential(const Graph& g, const Flavor& f) {
    LinComb lc;
    lc.add(g, 1, f.parity(), f.sym());
    return differential(lc, f);
}

LinComb differential(const LinComb& lc, const Flavor& f) {
    Parity p = f.parity();
    Sym s = f.sym();
    LinComb acc;
    for (auto& [key, t] : lc.terms) {
        if (!f.admits(t.rep))
            throw std::invalid_argument("differential: term outside flavor " + f.name() +
                                        ": " + key);
        for (int x = 0; x < t.rep.v; ++x) {
            LinComb sp = vertex_split(t.rep, x, p, s);
            sp *= t.c;
            acc += sp;
            LinComb uo = add_univalent(t.rep, x, true, p, s);
            uo *= -t.c;
            acc += uo;
            // The incoming pendant's new tail vertex sits before x in the
            // vertex order; rewriting it as appended-at-end costs the sign of
            // the transposition (x, v+1), i.e. a factor -1 when vertex order
            // is part of the orientation (odd k). This is exactly what makes
            // it cancel the splitting term in which x keeps no endpoint.
            LinComb ui = add_univalent(t.rep, x, false, p, s);
            ui *= (p == Parity::Odd ? t.c : -t.c);
            acc += ui;
        }
    }
    if (f.is_quotient()) {
        LinComb proj;
        for (auto& [key, t] : acc.terms)
            if (!f.projected_out(t.rep)) proj.add_canonical(key, t.rep, t.c);
        return proj;
    }
    // closure check for subcomplex flavors
    for (auto& [key, t] : acc.terms)
        if (!f.admits(t.rep))
            throw std::logic_error("differential left flavor " + f.name() + ": " + key);
    return acc;
}

Flavor Flavor::parse(const std::string& s, int k) {
    static const std::pair<const char*, Base> table[] = {
        {"cfGC", cfGC}, {"GC", GC},         {"b2GC", b2GC},     {"cfdGC", cfdGC},
        {"dGC", dGC},   {"dGCs", dGC_s},    {"dGCt", dGC_t},    {"dGCst", dGC_st},
        {"dGCs+t", dGC_spt}, {"dGCwheel", dGC_wheeled}};
    for (auto& [name, base] : table)
        if (s == name) return Flavor{base, k};
    throw std::invalid_argument("unknown flavor: " + s);
}

std::pair<int, bool> degree_bound_check(int k, int b) {
    if (b < 2) throw std::invalid_argument("degree_bound_check needs b >= 2");
    // In GC_k every vertex is >= trivalent, so 3v <= 2e with e = v + b - 1,
    // hence v <= 2b - 2 and each bidegree is finite.
    int bound = (3 - k) * b - 3;
    int maxdeg = INT_MIN;
    EnumConstraints c;
    c.allow_tadpoles = false;
    c.min_total_valence = 3;
    for (int v = 1; v <= 2 * b - 2; ++v) {
        int e = v + b - 1;
        for (const Graph& g : enumerate_shapes(v, e, c)) {
            Canon cn = canonicalize(g, parity_of(k), Sym::Undirected);
            if (cn.zero) continue;
            maxdeg = std::max(maxdeg, degree(g, k));
        }
    }
    return {maxdeg, maxdeg == INT_MIN || maxdeg <= bound};
}

} // namespace gcx
