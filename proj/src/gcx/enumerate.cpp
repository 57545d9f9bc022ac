#include "enumerate.hpp"

#include <algorithm>
#include <map>

namespace gcx {

namespace {

bool shape_ok(const Graph& g, const EnumConstraints& c) {
    if (!is_connected(g)) return false;
    for (int x = 0; x < g.v; ++x) {
        int val = valence(g, x);
        if (val < c.min_total_valence) return false;
        if (c.all_bivalent && val != 2) return false;
    }
    return true;
}

void gen_shapes(int v, int e, const EnumConstraints& c, Graph& cur,
                std::pair<int, int> minpair, std::vector<int>& deg,
                std::map<std::string, Graph>& out) {
    int placed = cur.e();
    if (placed == e) {
        if (!shape_ok(cur, c)) return;
        Canon cn = canonicalize(cur, Parity::Even, Sym::Undirected);
        out.emplace(cn.key, cn.rep);
        return;
    }
    int remaining = e - placed;
    // prune: every vertex must still be able to reach min valence
    long deficit = 0;
    for (int x = 0; x < v; ++x) {
        int need = c.all_bivalent ? 2 : c.min_total_valence;
        if (deg[x] < need) deficit += need - deg[x];
    }
    if (deficit > 2L * remaining) return;
    for (int a = minpair.first; a < v; ++a) {
        int bstart = (a == minpair.first) ? minpair.second : a;
        for (int b = std::max(bstart, a); b < v; ++b) {
            if (a == b && !c.allow_tadpoles) continue;
            if (!c.allow_multiedges && !cur.edges.empty() &&
                cur.edges.back() == std::make_pair(a, b))
                continue;
            if (c.all_bivalent && (deg[a] >= 2 || deg[b] >= 2) && !(a == b && deg[a] == 0))
                continue;
            cur.edges.emplace_back(a, b);
            deg[a] += (a == b) ? 2 : 1;
            if (a != b) deg[b] += 1;
            gen_shapes(v, e, c, cur, {a, b}, deg, out);
            deg[a] -= (a == b) ? 2 : 1;
            if (a != b) deg[b] -= 1;
            cur.edges.pop_back();
        }
    }
}

bool directed_ok(const Graph& g, const EnumConstraints& c) {
    bool some3 = false;
    for (int x = 0; x < g.v; ++x) {
        VertexClass vc = classify_vertex(g, x);
        if (c.forbid_passing && vc == VertexClass::Passing) return false;
        if (c.no_univalent &&
            (vc == VertexClass::UnivalentIn || vc == VertexClass::UnivalentOut))
            return false;
        if (valence(g, x) >= 3) some3 = true;
    }
    if (c.require_some_trivalent && !some3) return false;
    if (c.require_has_source && !has_source(g)) return false;
    if (c.require_has_target && !has_target(g)) return false;
    if (c.require_no_source && has_source(g)) return false;
    if (c.require_no_target && has_target(g)) return false;
    if (c.require_oriented && has_directed_cycle(g)) return false;
    return true;
}

} // namespace

std::vector<Graph> enumerate_shapes(int v, int e, const EnumConstraints& c) {
    std::map<std::string, Graph> out;
    if (v <= 0) return {};
    if (c.all_bivalent) {
        // a connected 2-regular graph is a single cycle
        if (e != v) return {};
        if (v == 1 && !c.allow_tadpoles) return {};
        if (v == 2 && !c.allow_multiedges) return {};
        Graph g;
        g.v = v;
        for (int x = 0; x < v; ++x) g.edges.emplace_back(std::min(x, (x + 1) % v),
                                                         std::max(x, (x + 1) % v));
        if (!shape_ok(g, c)) return {};
        return {canonicalize(g, Parity::Even, Sym::Undirected).rep};
    }
    if (v == 1 && e == 0) {
        Graph g;
        g.v = 1;
        if (shape_ok(g, c)) return {g};
        return {};
    }
    Graph cur;
    cur.v = v;
    std::vector<int> deg(v, 0);
    gen_shapes(v, e, c, cur, {0, 0}, deg, out);
    std::vector<Graph> res;
    for (auto& [k, g] : out) res.push_back(g);
    return res;
}

std::vector<Graph> enumerate_directed(int v, int e, const EnumConstraints& c) {
    EnumConstraints shapec = c; // valence-level filters apply to shapes
    std::vector<Graph> shapes = enumerate_shapes(v, e, shapec);
    std::map<std::string, Graph> out;
    for (const Graph& sh : shapes) {
        int ne = sh.e();
        for (unsigned mask = 0; mask < (1u << ne); ++mask) {
            Graph g = sh;
            bool skip = false;
            for (int i = 0; i < ne; ++i)
                if (mask & (1u << i)) {
                    auto& [t, h] = g.edges[i];
                    if (t == h) { // tadpole has a single orientation
                        skip = true;
                        break;
                    }
                    std::swap(t, h);
                }
            if (skip) continue;
            if (!directed_ok(g, c)) continue;
            Canon cn = canonicalize(g, Parity::Even, Sym::Directed);
            out.emplace(cn.key, cn.rep);
        }
    }
    std::vector<Graph> res;
    for (auto& [k, g] : out) res.push_back(g);
    return res;
}

} // namespace gcx
