#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcx/canon.hpp"
#include "gcx/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace gcx;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& pos) {
    Graph h = g;
    for (auto& [t, hd] : h.edges) {
        t = pos[t];
        hd = pos[hd];
    }
    if (!g.weights.empty())
        for (int x = 0; x < g.v; ++x) h.weights[pos[x]] = g.weights[x];
    if (!g.decs.empty())
        for (int x = 0; x < g.v; ++x) h.decs[pos[x]] = g.decs[x];
    return h;
}

} // namespace

TEST_CASE("canonical key constant under relabeling, sign consistent") {
    Graph tetra = parse_graph("v=4;e=1-2,1-3,1-4,2-3,2-4,3-4");
    for (Parity p : {Parity::Even, Parity::Odd})
        for (Sym s : {Sym::Directed, Sym::Undirected}) {
            Canon base = canonicalize(tetra, p, s);
            std::vector<int> pos(4);
            std::iota(pos.begin(), pos.end(), 0);
            do {
                Canon c = canonicalize(relabel(tetra, pos), p, s);
                CHECK(c.key == base.key);
                CHECK(c.zero == base.zero);
            } while (std::next_permutation(pos.begin(), pos.end()));
        }
}

TEST_CASE("idempotence: canonicalize(rep) = (same key, +1)") {
    EnumConstraints c;
    for (int v = 2; v <= 4; ++v)
        for (int e = 1; e <= 4; ++e)
            for (const Graph& g : enumerate_directed(v, e, c))
                for (Parity p : {Parity::Even, Parity::Odd}) {
                    Canon c1 = canonicalize(g, p, Sym::Directed);
                    Canon c2 = canonicalize(c1.rep, p, Sym::Directed);
                    CHECK(c2.key == c1.key);
                    CHECK(c2.sign == 1);
                }
}

TEST_CASE("sign multiplicativity on a window") {
    EnumConstraints cc;
    for (const Graph& g : enumerate_directed(3, 4, cc)) {
        for (Parity p : {Parity::Even, Parity::Odd})
            for (Sym s : {Sym::Directed, Sym::Undirected}) {
                Canon base = canonicalize(g, p, s);
                if (base.zero) continue;
                std::vector<int> pos(g.v);
                std::iota(pos.begin(), pos.end(), 0);
                do {
                    // sign(g -> canon) must equal sign(relabeled -> canon) times
                    // the sign of the relabeling itself, exercised indirectly:
                    // canonicalizing the relabeled graph must give a sign such
                    // that both routes agree on the representative.
                    Canon c = canonicalize(relabel(g, pos), p, s);
                    CHECK(c.key == base.key);
                } while (std::next_permutation(pos.begin(), pos.end()));
            }
    }
}

TEST_CASE("forced zero classes") {
    // double directed edge, even parity
    Graph dbl = parse_graph("v=2;e=1-2,1-2");
    CHECK(canonicalize(dbl, Parity::Even, Sym::Directed).zero);
    CHECK_FALSE(canonicalize(dbl, Parity::Odd, Sym::Directed).zero);
    // undirected tadpole, odd parity
    Graph tp = parse_graph("v=1;e=1-1");
    CHECK(canonicalize(tp, Parity::Odd, Sym::Undirected).zero);
    CHECK_FALSE(canonicalize(tp, Parity::Even, Sym::Undirected).zero);
}

TEST_CASE("loop graphs: nonzero iff i = 2k+1 mod 4") {
    for (int k : {2, 3}) {
        for (int i = 1; i <= 9; ++i) {
            Graph loop;
            loop.v = i;
            for (int j = 0; j < i; ++j) loop.edges.emplace_back(j, (j + 1) % i);
            Canon c = canonicalize(loop, parity_of(k), Sym::Undirected);
            bool expect_nonzero = (i % 4) == ((2 * k + 1) % 4);
            CHECK(c.zero == !expect_nonzero);
        }
    }
}

TEST_CASE("automorphism groups") {
    Graph cyc = parse_graph("v=3;e=1-2,2-3,3-1");
    CHECK(automorphism_group(cyc, Sym::Directed).size() == 3);
    Graph tetra = parse_graph("v=4;e=1-2,1-3,1-4,2-3,2-4,3-4");
    CHECK(automorphism_group(tetra, Sym::Undirected).size() == 24);
    Graph edge = parse_graph("v=2;e=1-2");
    CHECK(automorphism_group(edge, Sym::Directed).size() == 1);
}

TEST_CASE("oracle equivalence on small windows") {
    EnumConstraints cc;
    for (int v = 2; v <= 3; ++v)
        for (int e = 1; e <= 4; ++e) {
            auto graphs = enumerate_directed(v, e, cc);
            // pairwise non-isomorphic per the naive oracle
            for (size_t i = 0; i < graphs.size(); ++i)
                for (size_t j = i + 1; j < graphs.size(); ++j)
                    CHECK_FALSE(naive_isomorphic(graphs[i], graphs[j], Sym::Directed));
        }
}

TEST_CASE("directed edge 1->2 vs 2->1: same class") {
    Graph a = parse_graph("v=2;e=1-2");
    Graph b = parse_graph("v=2;e=2-1");
    for (Parity p : {Parity::Even, Parity::Odd}) {
        Canon ca = canonicalize(a, p, Sym::Directed);
        Canon cb = canonicalize(b, p, Sym::Directed);
        CHECK(ca.key == cb.key);
        // the vertex swap relating the two labelings is sign-free only for even k
        if (p == Parity::Even) CHECK(ca.sign * cb.sign == 1);
        else CHECK(ca.sign * cb.sign == -1);
    }
}
