#ifndef GCX_ENUMERATE_HPP
#define GCX_ENUMERATE_HPP

#include "canon.hpp"

#include <vector>

namespace gcx {

struct EnumConstraints {
    bool allow_tadpoles = true;
    bool allow_multiedges = true;
    int min_total_valence = 0;
    bool all_bivalent = false;
    bool forbid_passing = false;
    bool no_univalent = false;
    bool require_some_trivalent = false; // >= 1 vertex of valence >= 3
    bool require_has_source = false;
    bool require_has_target = false;
    bool require_no_source = false;
    bool require_no_target = false;
    bool require_oriented = false; // no directed cycle
};

// Connected undirected multigraph shapes up to isomorphism (edges stored with
// tail <= head), deterministic order (lexicographic on canonical keys).
std::vector<Graph> enumerate_shapes(int v, int e, const EnumConstraints& c);

// Connected directed multigraphs up to isomorphism: all orientations of all
// shapes, deduplicated canonically and filtered by the directed constraints.
std::vector<Graph> enumerate_directed(int v, int e, const EnumConstraints& c);

} // namespace gcx

#endif
