#ifndef GCX_BIWEIGHT_HPP
#define GCX_BIWEIGHT_HPP

#include "lincomb.hpp"

#include <array>

namespace gcx {

// ---- bi-weighted complex ---------------------------------------------------

// A bi-weight assignment is valid when, at every vertex x,
//   w_out + |x|_out >= 1,  w_in + |x|_in >= 1,  and the four numbers sum to >= 3.
bool validate_biweight(const Graph& g);

// Vertex splitting combined with all redistributions of the bi-weight of x;
// terms with an invalid bi-weight are dropped. Weight redistribution itself is
// sign-free.
LinComb bw_vertex_split(const Graph& g, int x, Parity p);

// Decrement the out-weight (out = true) or in-weight of x and attach a
// pendant vertex via an outgoing/incoming edge, summing over all valid pendant
// bi-weights with entries <= cap. Zero when the decremented weight would go
// negative.
LinComb bw_add_univalent(const Graph& g, int x, bool out, int cap, Parity p);

// Full weighted differential at weight cap `cap` (terms with a weight beyond
// the cap are not produced by the pendant sums; splitting never raises the
// total weight).
LinComb fw_differential(const LinComb& lc, int k, int cap);
LinComb fw_differential(const Graph& g, int k, int cap);

// Expand infinity-weight markers: inf[x] = {r_out, r_in} with -1 meaning the
// stored integer weight, and r >= 0 meaning the formal sum over weights >= r.
// Expansion is truncated at cap and invalid terms are dropped.
LinComb expand_infinity(const Graph& g, const std::vector<std::array<int, 2>>& inf, int cap,
                        Parity p);

enum class FwClass { Plus, Zero, Star };
bool fwgc_membership(const Graph& g, FwClass which);

// Degree of a weighted generator for shift parameters (p, q), k = p+q+1.
// Computed by two independent formulas which are asserted to agree.
int holieb_degree(const Graph& g, int p, int q);

// ---- decorated complex -----------------------------------------------------

bool decoration_legal(VertexClass c, Dec d);
bool decorations_legal(const Graph& g);

// Differential of the four-type decorated complex. Splitting terms assign the
// displayed decoration pairs to the two halves of x; pendant-creating terms
// redecorate x and attach an InfInf pendant. Illegal results are dropped.
// Defined only on graphs of loop order >= 1 (both operations preserve the
// loop order); throws on trees.
LinComb qgc_differential(const LinComb& lc, int k);
LinComb qgc_differential(const Graph& g, int k);

// As above, but split as d = d_s + d_u where d_u collects the terms with more
// univalent vertices than the input and d_s the rest.
std::pair<LinComb, LinComb> qgc_differential_split(const LinComb& lc, int k);

// Projection to the quotient by graphs carrying a ZeroZero decoration; the
// mono-decorated identities and chain maps live in this quotient.
LinComb drop_zero_decorated(const LinComb& lc);

enum class Mono { Omega, OutInf, InInf };

// Mono-decorations of a plain directed graph: Omega sums every legal
// decoration; OutInf/InInf decorate all non-univalent vertices by InfZero /
// ZeroInf (zero when the graph has a source / target). Univalent vertices are
// always InfInf. Omega rejects graphs with univalent vertices unless
// allow_univalent is set.
LinComb mono_decorate(const Graph& g, Mono which, Parity p, bool allow_univalent = false);

} // namespace gcx

#endif
