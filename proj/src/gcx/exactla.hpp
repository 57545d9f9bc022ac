#ifndef GCX_EXACTLA_HPP
#define GCX_EXACTLA_HPP

#include "graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcx {

// Sparse matrix over exact rationals with graph-class key bases.
struct SparseMatrix {
    int n_rows = 0, n_cols = 0;
    std::vector<std::tuple<int, int, Rat>> triplets; // no zeros, no duplicates
    std::vector<std::string> row_basis, col_basis;   // may be empty

    void set(int r, int c, const Rat& v) {
        if (v != 0) triplets.emplace_back(r, c, v);
    }
    SparseMatrix transposed() const;
};

// Exact rank by fraction-free (Bareiss) elimination with Markowitz pivoting.
long rank_sparse(const SparseMatrix& m);

// Dense fraction-free elimination oracle.
long rank_dense(const SparseMatrix& m);

// Rank over GF(p); a lower bound for the rational rank.
long rank_mod_p(const SparseMatrix& m, long p = 32003);

// Exact column-span membership; returns the certificate c with M*c = v when
// v lies in the span, and asserts rank([M|v]) = rank(M)+1 otherwise.
std::pair<bool, std::optional<std::vector<Rat>>> in_column_span(const SparseMatrix& m,
                                                                const std::vector<Rat>& v);

std::string export_sms(const SparseMatrix& m);
SparseMatrix import_sms(const std::string& text);

} // namespace gcx

#endif
