#ifndef GCX_GCOMPLEX_HPP
#define GCX_GCOMPLEX_HPP

#include "flavor.hpp"
#include "lincomb.hpp"

namespace gcx {

// Splitting of vertex x: every endpoint of an edge at x is reattached to x or
// to a new vertex (labeled v+1), joined by a new edge x -> v+1 labeled e+1.
LinComb vertex_split(const Graph& g, int x, Parity p, Sym s);

// Attach a univalent vertex to x by an outgoing (x -> new) or incoming
// (new -> x) edge; new vertex labeled v+1, new edge labeled e+1.
LinComb add_univalent(const Graph& g, int x, bool out, Parity p, Sym s);

// d = delta - delta' - delta'' applied termwise, then flavor handling:
// quotient flavors project killed terms away, subcomplex flavors assert
// closure (surviving terms must satisfy the generator constraints).
LinComb differential(const LinComb& lc, const Flavor& f);
LinComb differential(const Graph& g, const Flavor& f);

// Largest generator degree of GC_k in loop order b, verified by enumeration.
// Returns (max found degree or INT_MIN if no generators, bound satisfied).
std::pair<int, bool> degree_bound_check(int k, int b);

} // namespace gcx

#endif
