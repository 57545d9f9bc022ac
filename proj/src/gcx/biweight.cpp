#include "biweight.hpp"

#include <stdexcept>

namespace gcx {

namespace {

bool biweight_ok(const Graph& g, int x) {
    int wo = g.weights[x][0], wi = g.weights[x][1];
    int o = out_valence(g, x), i = in_valence(g, x);
    return wo + o >= 1 && wi + i >= 1 && wo + wi + o + i >= 3;
}

// endpoint slots of x: (edge index, 0 = tail side / 1 = head side)
std::vector<std::pair<int, int>> slots_at(const Graph& g, int x) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < g.e(); ++i) {
        if (g.edges[i].first == x) slots.push_back({i, 0});
        if (g.edges[i].second == x) slots.push_back({i, 1});
    }
    return slots;
}

// Relative sign of the incoming-pendant piece; see the matching comment in the
// plain differential: its new tail vertex sits before x in the vertex order,
// which costs a transposition when vertex order is signed (odd k).
Rat in_pendant_coeff(Parity p) { return p == Parity::Odd ? Rat(1) : Rat(-1); }

} // namespace

bool validate_biweight(const Graph& g) {
    if ((int)g.weights.size() != g.v) return false;
    for (int x = 0; x < g.v; ++x)
        if (!biweight_ok(g, x)) return false;
    return true;
}

LinComb bw_vertex_split(const Graph& g, int x, Parity p) {
    if ((int)g.weights.size() != g.v) throw std::invalid_argument("graph is not bi-weighted");
    auto slots = slots_at(g, x);
    int m = g.weights[x][0], n = g.weights[x][1];
    LinComb out;
    int nv = g.v;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask)
        for (int m1 = 0; m1 <= m; ++m1)
            for (int n1 = 0; n1 <= n; ++n1) {
                Graph h = g;
                h.v = nv + 1;
                for (size_t j = 0; j < slots.size(); ++j)
                    if (mask & (1u << j)) {
                        auto& [i, side] = slots[j];
                        (side == 0 ? h.edges[i].first : h.edges[i].second) = nv;
                    }
                h.edges.emplace_back(x, nv);
                h.weights[x] = {m1, n1};
                h.weights.push_back({m - m1, n - n1});
                if (!biweight_ok(h, x) || !biweight_ok(h, nv)) continue;
                out.add(h, 1, p, Sym::Directed);
            }
    return out;
}

LinComb bw_add_univalent(const Graph& g, int x, bool out_dir, int cap, Parity p) {
    if ((int)g.weights.size() != g.v) throw std::invalid_argument("graph is not bi-weighted");
    LinComb out;
    int slot = out_dir ? 0 : 1;
    if (g.weights[x][slot] == 0) return out;
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; j <= cap; ++j) {
            // pendant validity: the edge supplies one out-slot (incoming
            // pendant) or one in-slot (outgoing pendant)
            if (i + j < 2) continue;
            if (out_dir ? i < 1 : j < 1) continue;
            Graph h = g;
            h.v = g.v + 1;
            h.weights[x][slot] -= 1;
            if (out_dir) h.edges.emplace_back(x, g.v);
            else h.edges.emplace_back(g.v, x);
            h.weights.push_back({i, j});
            if (!biweight_ok(h, x)) continue;
            out.add(h, 1, p, Sym::Directed);
        }
    return out;
}

LinComb fw_differential(const LinComb& lc, int k, int cap) {
    Parity p = parity_of(k);
    LinComb acc;
    for (auto& [key, t] : lc.terms) {
        if (!validate_biweight(t.rep))
            throw std::invalid_argument("fw_differential: invalid bi-weights: " + key);
        for (int x = 0; x < t.rep.v; ++x) {
            LinComb sp = bw_vertex_split(t.rep, x, p);
            sp *= t.c;
            acc += sp;
            LinComb uo = bw_add_univalent(t.rep, x, true, cap, p);
            uo *= -t.c;
            acc += uo;
            LinComb ui = bw_add_univalent(t.rep, x, false, cap, p);
            ui *= in_pendant_coeff(p) * t.c;
            acc += ui;
        }
    }
    return acc;
}

LinComb fw_differential(const Graph& g, int k, int cap) {
    LinComb lc;
    lc.add(g, 1, parity_of(k), Sym::Directed);
    return fw_differential(lc, k, cap);
}

LinComb expand_infinity(const Graph& g, const std::vector<std::array<int, 2>>& inf, int cap,
                        Parity p) {
    if ((int)g.weights.size() != g.v || (int)inf.size() != g.v)
        throw std::invalid_argument("expand_infinity: weights/markers must cover all vertices");
    for (auto& m : inf)
        for (int s = 0; s < 2; ++s)
            if (m[s] > cap) throw std::invalid_argument("expand_infinity: cap below threshold");
    LinComb out;
    std::vector<std::pair<int, int>> slots; // (vertex, side) carrying a marker
    for (int x = 0; x < g.v; ++x)
        for (int s = 0; s < 2; ++s)
            if (inf[x][s] >= 0) slots.push_back({x, s});
    std::vector<int> w(slots.size());
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == slots.size()) {
            Graph h = g;
            for (size_t j = 0; j < slots.size(); ++j)
                h.weights[slots[j].first][slots[j].second] = w[j];
            if (validate_biweight(h)) out.add(h, 1, p, Sym::Directed);
            return;
        }
        for (int val = inf[slots[i].first][slots[i].second]; val <= cap; ++val) {
            w[i] = val;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool fwgc_membership(const Graph& g, FwClass which) {
    if ((int)g.weights.size() != g.v) throw std::invalid_argument("graph is not bi-weighted");
    bool some_out = false, some_in = false, all_zero = true;
    for (int x = 0; x < g.v; ++x) {
        if (g.weights[x][0] > 0) some_out = true;
        if (g.weights[x][1] > 0) some_in = true;
        if (g.weights[x][0] || g.weights[x][1]) all_zero = false;
    }
    switch (which) {
    case FwClass::Plus: return some_out && some_in;
    case FwClass::Zero: return all_zero;
    case FwClass::Star: return !all_zero;
    }
    return false;
}

int holieb_degree(const Graph& g, int p, int q) {
    if ((int)g.weights.size() != g.v) throw std::invalid_argument("graph is not bi-weighted");
    int f1 = (g.v - 1) * (p + q + 1) - g.e() * (p + q);
    int m = 0, n = 0;
    for (int x = 0; x < g.v; ++x) {
        m += g.weights[x][0];
        n += g.weights[x][1];
    }
    int f2 = 0;
    for (int x = 0; x < g.v; ++x)
        f2 += 1 - p * (out_valence(g, x) + g.weights[x][0] - 1) -
              q * (in_valence(g, x) + g.weights[x][1] - 1);
    f2 += -1 - p * (1 - m) - q * (1 - n);
    if (f1 != f2) throw std::logic_error("holieb_degree: the two formulas disagree");
    return f1;
}

// ---- decorated complex -----------------------------------------------------

bool decoration_legal(VertexClass c, Dec d) {
    switch (c) {
    case VertexClass::UnivalentOut:
    case VertexClass::UnivalentIn: return d == Dec::InfInf;
    case VertexClass::Source: return d == Dec::InfInf || d == Dec::ZeroInf;
    case VertexClass::Target: return d == Dec::InfInf || d == Dec::InfZero;
    case VertexClass::Passing: return d != Dec::ZeroZero;
    case VertexClass::Generic: return true;
    }
    return false;
}

bool decorations_legal(const Graph& g) {
    if ((int)g.decs.size() != g.v) return false;
    for (int x = 0; x < g.v; ++x)
        if (!decoration_legal(classify_vertex(g, x), g.decs[x])) return false;
    return true;
}

namespace {

using DecPair = std::pair<Dec, Dec>;
constexpr Dec OO = Dec::InfInf, O0 = Dec::InfZero, ZO = Dec::ZeroInf, ZZ = Dec::ZeroZero;

const std::vector<DecPair>& split_rules(Dec d) {
    static const std::vector<DecPair> oo = {{OO, OO}, {ZO, OO}, {O0, OO}, {OO, ZO}, {OO, O0},
                                            {ZZ, OO}, {O0, ZO}, {ZO, O0}, {OO, ZZ}};
    static const std::vector<DecPair> zo = {{ZO, ZO}, {ZZ, ZO}, {ZO, ZZ}};
    static const std::vector<DecPair> o0 = {{O0, O0}, {ZZ, O0}, {O0, ZZ}};
    static const std::vector<DecPair> zz = {{ZZ, ZZ}};
    switch (d) {
    case OO: return oo;
    case ZO: return zo;
    case O0: return o0;
    default: return zz;
    }
}

// pendant-creating rules: (redecoration of x, pendant attached by an outgoing edge?)
const std::vector<std::pair<Dec, bool>>& pendant_rules(Dec d) {
    static const std::vector<std::pair<Dec, bool>> oo = {
        {OO, true}, {ZO, true}, {OO, false}, {O0, false}};
    static const std::vector<std::pair<Dec, bool>> zo = {{ZO, false}, {ZZ, false}};
    static const std::vector<std::pair<Dec, bool>> o0 = {{O0, true}, {ZZ, true}};
    static const std::vector<std::pair<Dec, bool>> zz = {};
    switch (d) {
    case OO: return oo;
    case ZO: return zo;
    case O0: return o0;
    default: return zz;
    }
}

int count_univalent(const Graph& g) {
    int n = 0;
    for (int x = 0; x < g.v; ++x) {
        VertexClass c = classify_vertex(g, x);
        if (c == VertexClass::UnivalentIn || c == VertexClass::UnivalentOut) ++n;
    }
    return n;
}

void qgc_parts(const LinComb& lc, int k, LinComb& ds, LinComb& du) {
    Parity p = parity_of(k);
    for (auto& [key, t] : lc.terms) {
        if (!decorations_legal(t.rep))
            throw std::invalid_argument("qgc_differential: illegal decoration: " + key);
        // The decorated complex lives on graphs of loop order >= 1; on trees
        // the displayed rules do not square to zero.
        if (loop_number(t.rep) < 1)
            throw std::invalid_argument("qgc_differential: loop order 0: " + key);
        const Graph& g = t.rep;
        int base_univ = count_univalent(g);
        // d_u collects the terms with more univalent vertices than the
        // input (a degenerate splitting can strand a vertex with only the
        // new edge, and a pendant on a univalent vertex creates none).
        auto sink = [&](const Graph& h) -> LinComb& {
            return count_univalent(h) > base_univ ? du : ds;
        };
        for (int x = 0; x < g.v; ++x) {
            auto slots = slots_at(g, x);
            for (auto& [da, db] : split_rules(g.decs[x]))
                for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
                    Graph h = g;
                    h.v = g.v + 1;
                    for (size_t j = 0; j < slots.size(); ++j)
                        if (mask & (1u << j)) {
                            auto& [i, side] = slots[j];
                            (side == 0 ? h.edges[i].first : h.edges[i].second) = g.v;
                        }
                    h.edges.emplace_back(x, g.v);
                    h.decs[x] = da;
                    h.decs.push_back(db);
                    if (!decoration_legal(classify_vertex(h, x), da)) continue;
                    if (!decoration_legal(classify_vertex(h, g.v), db)) continue;
                    sink(h).add(h, t.c, p, Sym::Directed);
                }
            for (auto& [dx, out_dir] : pendant_rules(g.decs[x])) {
                Graph h = g;
                h.v = g.v + 1;
                if (out_dir) h.edges.emplace_back(x, g.v);
                else h.edges.emplace_back(g.v, x);
                h.decs[x] = dx;
                h.decs.push_back(OO);
                if (!decoration_legal(classify_vertex(h, x), dx)) continue;
                Rat c = out_dir ? -t.c : in_pendant_coeff(p) * t.c;
                sink(h).add(h, c, p, Sym::Directed);
            }
        }
    }
}

} // namespace

std::pair<LinComb, LinComb> qgc_differential_split(const LinComb& lc, int k) {
    LinComb ds, du;
    qgc_parts(lc, k, ds, du);
    return {ds, du};
}

LinComb qgc_differential(const LinComb& lc, int k) {
    LinComb ds, du;
    qgc_parts(lc, k, ds, du);
    ds += du;
    return ds;
}

LinComb qgc_differential(const Graph& g, int k) {
    LinComb lc;
    lc.add(g, 1, parity_of(k), Sym::Directed);
    return qgc_differential(lc, k);
}

LinComb drop_zero_decorated(const LinComb& lc) {
    LinComb out;
    for (auto& [key, t] : lc.terms) {
        bool has_zz = false;
        for (Dec d : t.rep.decs) has_zz |= d == Dec::ZeroZero;
        if (!has_zz) out.add_canonical(key, t.rep, t.c);
    }
    return out;
}

LinComb mono_decorate(const Graph& g, Mono which, Parity p, bool allow_univalent) {
    if (!g.decs.empty()) throw std::invalid_argument("mono_decorate: graph already decorated");
    std::vector<VertexClass> cls(g.v);
    bool has_univ = false;
    for (int x = 0; x < g.v; ++x) {
        cls[x] = classify_vertex(g, x);
        if (cls[x] == VertexClass::UnivalentIn || cls[x] == VertexClass::UnivalentOut)
            has_univ = true;
    }
    LinComb out;
    if (which == Mono::Omega) {
        if (has_univ && !allow_univalent)
            throw std::invalid_argument("mono_decorate: omega needs a graph without "
                                        "univalent vertices");
        Graph h = g;
        h.decs.assign(g.v, OO);
        auto rec = [&](auto&& self, int x) -> void {
            if (x == g.v) {
                // keep only decorations with an InfInf vertex or an
                // InfZero/ZeroInf pair (the all-InfZero and all-ZeroInf
                // assignments are separate mono-decorated generators)
                bool oo = false, o0 = false, zo = false;
                for (Dec d : h.decs) {
                    oo |= d == OO;
                    o0 |= d == O0;
                    zo |= d == ZO;
                }
                if (oo || (o0 && zo)) out.add(h, 1, p, Sym::Directed);
                return;
            }
            for (Dec d : {OO, O0, ZO})
                if (decoration_legal(cls[x], d)) {
                    h.decs[x] = d;
                    self(self, x + 1);
                }
        };
        rec(rec, 0);
        return out;
    }
    if (which == Mono::OutInf && has_source(g)) return out;
    if (which == Mono::InInf && has_target(g)) return out;
    Graph h = g;
    h.decs.resize(g.v);
    for (int x = 0; x < g.v; ++x) {
        bool univ = cls[x] == VertexClass::UnivalentIn || cls[x] == VertexClass::UnivalentOut;
        h.decs[x] = univ ? OO : (which == Mono::OutInf ? O0 : ZO);
    }
    out.add(h, 1, p, Sym::Directed);
    return out;
}

} // namespace gcx
