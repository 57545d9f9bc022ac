#ifndef GCX_GRAPH_HPP
#define GCX_GRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Edge kinds for the mixed-edge complex. Plain complexes use only Solid.
enum class EdgeKind : int { Solid = 0, SDot = 1, TDot = 2, Wavy = 3 };

// Symbolic vertex decorations (out-slot / in-slot, each 0 or an infinity symbol).
enum class Dec : int {
    InfInf = 0, // oo
    InfZero = 1, // o0
    ZeroInf = 2, // 0o
    ZeroZero = 3, // 00
};

enum class VertexClass { Source, Target, Passing, Generic, UnivalentOut, UnivalentIn };

// Labeled connected directed multigraph with optional per-vertex bi-weights,
// per-vertex decorations, and per-edge kinds. Vertices are 0-based internally;
// the text format is 1-based.
struct Graph {
    int v = 0;
    std::vector<std::pair<int, int>> edges; // (tail, head)

    std::vector<std::array<int, 2>> weights; // (w_out, w_in); empty if unweighted
    std::vector<Dec> decs;                   // empty if undecorated
    std::vector<EdgeKind> kinds;             // empty means all Solid

    int e() const { return (int)edges.size(); }
    EdgeKind kind(int i) const { return kinds.empty() ? EdgeKind::Solid : kinds[i]; }

    bool operator==(const Graph&) const = default;
};

inline int loop_number(const Graph& g) { return g.e() - g.v + 1; }
inline int degree(const Graph& g, int k) { return (g.v - 1) * k + (1 - k) * g.e(); }

// Mixed-edge degree: (v-1)k + (1-k)e + e1 + 2*e2 with e1 = #dotted, e2 = #wavy.
int mixed_degree(const Graph& g, int k);

int out_valence(const Graph& g, int x); // tadpole counts once
int in_valence(const Graph& g, int x);  // tadpole counts once
inline int valence(const Graph& g, int x) { return out_valence(g, x) + in_valence(g, x); }

VertexClass classify_vertex(const Graph& g, int x);

bool is_connected(const Graph& g);
bool has_directed_cycle(const Graph& g);

// A source has only outgoing edges, a target only incoming ones
// (univalent vertices included).
inline bool has_source(const Graph& g) {
    for (int x = 0; x < g.v; ++x)
        if (in_valence(g, x) == 0 && out_valence(g, x) >= 1) return true;
    return false;
}
inline bool has_target(const Graph& g) {
    for (int x = 0; x < g.v; ++x)
        if (out_valence(g, x) == 0 && in_valence(g, x) >= 1) return true;
    return false;
}

enum class Membership { Sourced, Targeted, ST, SPlusT, Oriented, WheeledOnly };
bool subcomplex_membership(const Graph& g, Membership which);

// Text format: v=<int>;e=<tail>-<head>,... (1-based), plus optional
// ;w=<out>/<in>,...  ;dec=oo|o0|0o|00,...  ;kind=-|s|t|w,...
std::string format_graph(const Graph& g);
Graph parse_graph(const std::string& text);

} // namespace gcx

#endif
