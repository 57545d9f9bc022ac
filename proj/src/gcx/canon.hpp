#ifndef GCX_CANON_HPP
#define GCX_CANON_HPP

#include "graph.hpp"

namespace gcx {

enum class Parity { Even, Odd };
enum class Sym { Directed, Undirected, Mixed };

inline Parity parity_of(int k) { return k % 2 == 0 ? Parity::Even : Parity::Odd; }

// Orientation conventions, per parity:
//   even k: the edge order carries the orientation (edge permutations are signed,
//           vertex permutations and edge flips are not);
//   odd k:  the vertex order carries it (vertex permutations signed); in the
//           undirected flavor each edge additionally holds a direction choice
//           whose flip is signed.
// The mixed flavor (four edge kinds, used with k=3 only) is odd-parity with the
// s-dotted and t-dotted edge lists each carrying a signed order; non-solid edge
// flips are sign-free since (-1)^(k+1) = +1.
struct Canon {
    Graph rep;       // canonical representative (orientation = stored order)
    std::string key; // flavor/parity tags + text format of rep
    int sign = 1;    // relates the input's orientation to the representative's
    bool zero = false; // some automorphism acts by -1
};

Canon canonicalize(const Graph& g, Parity p, Sym s);

// All vertex permutations mapping g to itself (directions, kinds and vertex
// attributes respected; for the undirected flavors edges may flip).
std::vector<std::vector<int>> automorphism_group(const Graph& g, Sym s);

// Brute-force isomorphism test over all vertex permutations; test oracle.
bool naive_isomorphic(const Graph& a, const Graph& b, Sym s);

} // namespace gcx

#endif
