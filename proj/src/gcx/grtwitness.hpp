#ifndef GCX_GRTWITNESS_HPP
#define GCX_GRTWITNESS_HPP

#include "exactla.hpp"
#include "graph.hpp"
#include "lincomb.hpp"

#include <string>
#include <vector>

namespace gcx {

// The mixed-edge complex: directed graphs with >=3-valent vertices and four
// edge kinds (solid of degree 0, s-dotted and t-dotted of degree 1, wavy of
// degree 2).  For odd k the dotted-edge directions are free, so classes are
// canonicalized under Sym::Mixed.

// A vertex is a solid source if every attached edge is solid-outgoing or
// t-dotted; a solid target if every attached edge is solid-incoming or
// s-dotted.
bool has_solid_source(const Graph& g);
bool has_solid_target(const Graph& g);

// Projection to the reduced quotient: classes mixing s- and t-edges, dotted
// with wavy edges, or carrying two or more wavy edges are dropped.
LinComb reduce_mixed(const LinComb& lc);

// Differential d = d_V + (-1)^v d_E.  d_V splits vertices without creating
// univalent or bivalent vertices; d_E rewrites one edge at a time with Koszul
// signs over the odd (dotted) edges before it: solid -> tdot - sdot,
// sdot -> wavy, tdot -> wavy, wavy -> 0.  With reduced=true the result is
// projected to the reduced quotient.  k must be odd.
LinComb mixed_differential(const LinComb& lc, int k, bool reduced = true);
LinComb mixed_differential(const Graph& g, int k, bool reduced = true);

// The two hand-picked bases of the tetrahedron computation (drawn
// representatives in the drawn order) plus the trivalent generator gamma whose
// differential is the candidate cocycle alpha.  With targeted=true all solid
// edges are reversed and s-dots become t-dots (the s <-> t involution).
struct WitnessBases {
    std::vector<Graph> a; // 10 tetrahedra with three s-edges, degree 0
    std::vector<Graph> x; // 11 graphs of degree -1
    Graph gamma;
    bool targeted = false;
};
WitnessBases build_witness_bases(bool targeted = false);

// The s <-> t involution on mixed graphs.
Graph reverse_solid_swap_dots(const Graph& g);

// 10 x 11 matrix of the composite (project to span(a)) . d on the x basis.
SparseMatrix witness_matrix(const WitnessBases& b);

// Comparison with the reference matrix up to rescaling each basis vector by
// +-1 (a diagonal sign change on both sides).
struct MatrixMatch {
    bool ok = false;
    std::vector<int> row_sign, col_sign;
};
MatrixMatch match_reference_matrix(const SparseMatrix& ours);

// f-substitution into the plain directed complex: an s-edge becomes a
// bivalent source wedge, a t-edge a bivalent target wedge, and a wavy edge
// the two four-vertex zigzags (second with coefficient (-1)^k).
LinComb substitute_dotted(const Graph& g, int k);

// The lift: Gamma^s / Gamma^t expand into four mixed terms with signs
// (+,-,-,+); the returned value is the f-image of d(Gamma), a cycle in the
// sourced-and-targeted directed complex.
LinComb lift_cycle(char kind, int k = 3);

// Templated rendering of the derivation induced by the lifted class on an
// (m,n) corolla: the four half-edge summands attached to the corolla.
std::string render_derivation(char kind, int m, int n);

struct GrtReport {
    bool bases_ok = false;      // sizes, degrees, distinctness, span check
    int dim_a_enumerated = 0;   // independent enumeration of the a-space
    bool matrix_ok = false;
    MatrixMatch match;
    long rank_q = 0, rank_p = 0;
    bool alpha_closed = false;
    bool alpha_s_in_image = true;
    bool alpha_t_in_image = true;
    bool alpha_diff_in_image = true;
    bool alpha_s_in_full_image = true; // against every degree -1 generator
    bool positive_control = false;     // a matrix column is in the span
    bool lift_cycle_s = false;
    bool lift_cycle_t = false;
    bool pass = false;
};
// field_p = 0 runs over the rationals; otherwise ranks are cross-checked mod p.
GrtReport run_tetrahedron_witness(const std::string& sms_dir = "");
std::string grt_report_to_json(const GrtReport& r);

} // namespace gcx

#endif
