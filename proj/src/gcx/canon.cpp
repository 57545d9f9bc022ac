#include "canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace gcx {

namespace {

int perm_sign(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Sign of the permutation that stably sorts `items`.
template <class T>
int stable_sort_sign(const std::vector<T>& items) {
    std::vector<int> idx(items.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return items[a] < items[b]; });
    return perm_sign(idx);
}

int64_t vertex_attr(const Graph& g, int x) {
    if (!g.weights.empty()) return 1 + (int64_t)g.weights[x][0] * 65536 + g.weights[x][1];
    if (!g.decs.empty()) return 1 + (int64_t)g.decs[x];
    return 0;
}

using EdgeItem = std::tuple<int, int, int>; // (kind, tail, head), relabeled

struct Searcher {
    const Graph& g; // normalized input
    Sym sym;
    int v, e;

    std::vector<std::string> best_enc_holder;
    std::string best;
    bool have_best = false;
    std::vector<std::vector<int>> best_perms; // orig vertex -> canonical position

    Searcher(const Graph& gg, Sym s) : g(gg), sym(s), v(gg.v), e(gg.e()) {}

    // --- refinement ---------------------------------------------------------
    std::vector<int> initial_colors() const {
        std::vector<std::pair<std::vector<int64_t>, int>> sig(v);
        for (int x = 0; x < v; ++x) {
            std::vector<int64_t> s{vertex_attr(g, x)};
            std::vector<int64_t> inc;
            for (int i = 0; i < e; ++i) {
                auto [t, h] = g.edges[i];
                int kd = (int)g.kind(i);
                // non-solid mixed edges carry no direction: use a symmetric
                // incidence code so refinement is isomorphism-invariant
                bool undir = sym == Sym::Undirected ||
                             (sym == Sym::Mixed && g.kind(i) != EdgeKind::Solid);
                if (undir) {
                    if (t == x) inc.push_back(kd * 3 + 2);
                    if (h == x) inc.push_back(kd * 3 + 2);
                } else {
                    if (t == x) inc.push_back(kd * 3);
                    if (h == x) inc.push_back(kd * 3 + 1);
                }
            }
            std::sort(inc.begin(), inc.end());
            s.insert(s.end(), inc.begin(), inc.end());
            sig[x] = {std::move(s), x};
        }
        return rank_colors(sig);
    }

    static std::vector<int> rank_colors(std::vector<std::pair<std::vector<int64_t>, int>>& sig) {
        std::sort(sig.begin(), sig.end());
        std::vector<int> col(sig.size());
        int c = -1;
        for (size_t i = 0; i < sig.size(); ++i) {
            if (i == 0 || sig[i].first != sig[i - 1].first) ++c;
            col[sig[i].second] = c;
        }
        return col;
    }

    void refine(std::vector<int>& col) const {
        for (;;) {
            int before = 1 + *std::max_element(col.begin(), col.end());
            std::vector<std::pair<std::vector<int64_t>, int>> sig(v);
            for (int x = 0; x < v; ++x) {
                std::vector<int64_t> s{col[x]};
                std::vector<int64_t> inc;
                for (int i = 0; i < e; ++i) {
                    auto [t, h] = g.edges[i];
                    int kd = (int)g.kind(i);
                    bool undir = sym == Sym::Undirected ||
                                 (sym == Sym::Mixed && g.kind(i) != EdgeKind::Solid);
                    if (undir) {
                        if (t == x) inc.push_back((kd * 3 + 2) * 10000 + col[h]);
                        if (h == x) inc.push_back((kd * 3 + 2) * 10000 + col[t]);
                    } else {
                        if (t == x) inc.push_back((kd * 3) * 10000 + col[h]);
                        if (h == x) inc.push_back((kd * 3 + 1) * 10000 + col[t]);
                    }
                }
                std::sort(inc.begin(), inc.end());
                s.insert(s.end(), inc.begin(), inc.end());
                sig[x] = {std::move(s), x};
            }
            col = rank_colors(sig);
            int after = 1 + *std::max_element(col.begin(), col.end());
            if (after == before) return;
        }
    }

    // --- leaves -------------------------------------------------------------
    EdgeItem relabel_edge(int i, const std::vector<int>& pos) const {
        auto [t, h] = g.edges[i];
        int kd = (int)g.kind(i);
        int a = pos[t], b = pos[h];
        bool undirected_kind =
            sym == Sym::Undirected || (sym == Sym::Mixed && g.kind(i) != EdgeKind::Solid);
        if (undirected_kind && a > b) std::swap(a, b);
        return {kd, a, b};
    }

    std::string encode(const std::vector<int>& pos) const {
        std::vector<EdgeItem> items(e);
        for (int i = 0; i < e; ++i) items[i] = relabel_edge(i, pos);
        std::sort(items.begin(), items.end());
        std::string out;
        out.reserve(v * 4 + e * 12);
        std::vector<int> inv(v);
        for (int x = 0; x < v; ++x) inv[pos[x]] = x;
        for (int p = 0; p < v; ++p) {
            out += std::to_string(vertex_attr(g, inv[p]));
            out += '.';
        }
        out += '|';
        for (auto& [kd, a, b] : items) {
            out += std::to_string(kd);
            out += ':';
            out += std::to_string(a);
            out += '-';
            out += std::to_string(b);
            out += ',';
        }
        return out;
    }

    void leaf(const std::vector<int>& col) {
        std::vector<int> pos(v);
        for (int x = 0; x < v; ++x) pos[x] = col[x];
        std::string enc = encode(pos);
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
            best_perms.clear();
            best_perms.push_back(pos);
        } else if (enc == best) {
            best_perms.push_back(pos);
        }
    }

    void search(std::vector<int> col) {
        refine(col);
        // first cell with >= 2 vertices
        int ncell = 1 + *std::max_element(col.begin(), col.end());
        if (ncell == v) {
            leaf(col);
            return;
        }
        int target = -1;
        std::vector<int> count(ncell, 0);
        for (int x = 0; x < v; ++x) ++count[col[x]];
        for (int c = 0; c < ncell; ++c)
            if (count[c] >= 2) {
                target = c;
                break;
            }
        for (int x = 0; x < v; ++x) {
            if (col[x] != target) continue;
            std::vector<int> col2(v);
            for (int y = 0; y < v; ++y) col2[y] = col[y] * 2 + 1;
            col2[x] = target * 2; // just below its old cell
            search(std::move(col2));
        }
    }

    void run() {
        std::vector<int> col = initial_colors();
        search(std::move(col));
    }

    // --- signs --------------------------------------------------------------
    int sign_of(const std::vector<int>& pos, Parity parity) const {
        if (parity == Parity::Even) {
            std::vector<EdgeItem> items(e);
            for (int i = 0; i < e; ++i) items[i] = relabel_edge(i, pos);
            return stable_sort_sign(items);
        }
        int s = perm_sign(pos);
        if (sym == Sym::Undirected) {
            for (auto& [t, h] : g.edges)
                if (t < h && pos[t] > pos[h]) s = -s;
        } else if (sym == Sym::Mixed) {
            std::vector<std::pair<int, int>> sdots, tdots;
            for (int i = 0; i < e; ++i) {
                EdgeKind kd = g.kind(i);
                if (kd != EdgeKind::SDot && kd != EdgeKind::TDot) continue;
                auto [t, h] = g.edges[i];
                int a = pos[t], b = pos[h];
                if (a > b) std::swap(a, b);
                (kd == EdgeKind::SDot ? sdots : tdots).push_back({a, b});
            }
            s *= stable_sort_sign(sdots) * stable_sort_sign(tdots);
        }
        return s;
    }
};

// Normalize stored edge directions for flavors whose edges (or non-solid
// edges) are undirected; returns the accumulated sign.
int normalize(Graph& g, Parity p, Sym s) {
    int sign = 1;
    if (s == Sym::Undirected) {
        for (auto& [t, h] : g.edges)
            if (t > h) {
                std::swap(t, h);
                if (p == Parity::Odd) sign = -sign;
            }
    } else if (s == Sym::Mixed) {
        for (int i = 0; i < g.e(); ++i)
            if (g.kind(i) != EdgeKind::Solid && g.edges[i].first > g.edges[i].second)
                std::swap(g.edges[i].first, g.edges[i].second);
    }
    return sign;
}

bool forced_zero(const Graph& g, Parity p, Sym s) {
    if (p == Parity::Even) {
        // Swapping two identical edges is an odd edge permutation.
        std::vector<EdgeItem> items;
        for (int i = 0; i < g.e(); ++i)
            items.push_back({(int)g.kind(i), g.edges[i].first, g.edges[i].second});
        std::sort(items.begin(), items.end());
        for (size_t i = 1; i < items.size(); ++i)
            if (items[i] == items[i - 1]) return true;
    } else if (s == Sym::Undirected) {
        // Flipping a tadpole is a signed involution for odd k.
        for (auto& [t, h] : g.edges)
            if (t == h) return true;
    } else if (s == Sym::Mixed) {
        // Swapping two identical dotted edges of the same kind is signed.
        std::vector<std::tuple<int, int, int>> dotted;
        for (int i = 0; i < g.e(); ++i) {
            EdgeKind kd = g.kind(i);
            if (kd == EdgeKind::SDot || kd == EdgeKind::TDot)
                dotted.push_back({(int)kd, g.edges[i].first, g.edges[i].second});
        }
        std::sort(dotted.begin(), dotted.end());
        for (size_t i = 1; i < dotted.size(); ++i)
            if (dotted[i] == dotted[i - 1]) return true;
    }
    return false;
}

Graph apply_perm(const Graph& g, const std::vector<int>& pos, Sym s) {
    Graph h;
    h.v = g.v;
    std::vector<int> inv(g.v);
    for (int x = 0; x < g.v; ++x) inv[pos[x]] = x;
    if (!g.weights.empty()) {
        h.weights.resize(g.v);
        for (int p = 0; p < g.v; ++p) h.weights[p] = g.weights[inv[p]];
    }
    if (!g.decs.empty()) {
        h.decs.resize(g.v);
        for (int p = 0; p < g.v; ++p) h.decs[p] = g.decs[inv[p]];
    }
    // edges sorted by (kind, tail, head) in the new labeling
    std::vector<std::tuple<int, int, int>> items;
    for (int i = 0; i < g.e(); ++i) {
        auto [t, h2] = g.edges[i];
        int a = pos[t], b = pos[h2];
        bool undirected_kind =
            s == Sym::Undirected || (s == Sym::Mixed && g.kind(i) != EdgeKind::Solid);
        if (undirected_kind && a > b) std::swap(a, b);
        items.push_back({(int)g.kind(i), a, b});
    }
    std::sort(items.begin(), items.end());
    bool kinds = !g.kinds.empty();
    for (auto& [kd, a, b] : items) {
        h.edges.emplace_back(a, b);
        if (kinds) h.kinds.push_back((EdgeKind)kd);
    }
    return h;
}

std::string key_prefix(Parity p, Sym s) {
    std::string out = s == Sym::Directed ? "dir" : (s == Sym::Undirected ? "und" : "mix");
    out += p == Parity::Even ? "|ev|" : "|od|";
    return out;
}

} // namespace

Canon canonicalize(const Graph& g0, Parity p, Sym s) {
    Graph g = g0;
    int presign = normalize(g, p, s);

    Searcher se(g, s);
    se.run();

    Canon c;
    const auto& pos0 = se.best_perms.front();
    c.rep = apply_perm(g, pos0, s);
    c.key = key_prefix(p, s) + format_graph(c.rep);
    c.sign = presign * se.sign_of(pos0, p);
    c.zero = forced_zero(g, p, s);
    if (!c.zero) {
        int s0 = se.sign_of(pos0, p);
        for (auto& pos : se.best_perms)
            if (se.sign_of(pos, p) != s0) {
                c.zero = true;
                break;
            }
    }
    return c;
}

std::vector<std::vector<int>> automorphism_group(const Graph& g0, Sym s) {
    Graph g = g0;
    normalize(g, Parity::Even, s);
    Searcher se(g, s);
    se.run();
    const auto& pos0 = se.best_perms.front();
    std::vector<int> inv0(g.v);
    std::vector<std::vector<int>> auts;
    for (auto& pos : se.best_perms) {
        // tau = pos^{-1} o pos0  maps the graph to itself
        std::vector<int> inv(g.v), tau(g.v);
        for (int x = 0; x < g.v; ++x) inv[pos[x]] = x;
        for (int x = 0; x < g.v; ++x) tau[x] = inv[pos0[x]];
        auts.push_back(tau);
    }
    return auts;
}

bool naive_isomorphic(const Graph& a, const Graph& b, Sym s) {
    if (a.v != b.v || a.e() != b.e()) return false;
    Graph an = a, bn = b;
    normalize(an, Parity::Even, s);
    normalize(bn, Parity::Even, s);
    auto multiset_of = [&](const Graph& g, const std::vector<int>& pos) {
        std::vector<std::tuple<int, int, int>> items;
        for (int i = 0; i < g.e(); ++i) {
            auto [t, h] = g.edges[i];
            int x = pos[t], y = pos[h];
            bool u = s == Sym::Undirected || (s == Sym::Mixed && g.kind(i) != EdgeKind::Solid);
            if (u && x > y) std::swap(x, y);
            items.push_back({(int)g.kind(i), x, y});
        }
        std::sort(items.begin(), items.end());
        return items;
    };
    std::vector<int> id(a.v);
    std::iota(id.begin(), id.end(), 0);
    auto target = multiset_of(bn, id);
    std::vector<int> perm = id;
    do {
        bool attrs_ok = true;
        for (int x = 0; x < a.v && attrs_ok; ++x)
            attrs_ok = vertex_attr(an, x) == vertex_attr(bn, perm[x]);
        if (attrs_ok && multiset_of(an, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace gcx
