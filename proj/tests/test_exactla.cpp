#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcx/exactla.hpp"

#include <random>

using namespace gcx;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& rows) {
    SparseMatrix m;
    m.n_rows = (int)rows.size();
    m.n_cols = rows.empty() ? 0 : (int)rows[0].size();
    for (int r = 0; r < m.n_rows; ++r)
        for (int c = 0; c < m.n_cols; ++c)
            if (rows[r][c]) m.triplets.emplace_back(r, c, Rat(rows[r][c]));
    return m;
}

SparseMatrix random_matrix(std::mt19937& rng, int n, int m, int density_pct) {
    SparseMatrix out;
    out.n_rows = n;
    out.n_cols = m;
    std::uniform_int_distribution<int> val(-9, 9), pct(0, 99);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c)
            if (pct(rng) < density_pct) {
                int v = val(rng);
                if (v) out.triplets.emplace_back(r, c, Rat(v));
            }
    return out;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank_sparse(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank_sparse(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_sparse(from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_dense(from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("sparse = dense = transpose = mod-p on random corpus") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + (int)(rng() % 12), m = 1 + (int)(rng() % 12);
        SparseMatrix a = random_matrix(rng, n, m, 35);
        long rs = rank_sparse(a);
        CHECK(rs == rank_dense(a));
        CHECK(rs == rank_sparse(a.transposed()));
        CHECK(rs == rank_mod_p(a));
    }
}

TEST_CASE("rank with rational entries and big growth") {
    SparseMatrix m;
    m.n_rows = m.n_cols = 6;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) m.triplets.emplace_back(r, c, Rat(1, r + c + 1));
    // Hilbert matrix is nonsingular
    CHECK(rank_sparse(m) == 6);
    CHECK(rank_dense(m) == 6);
}

TEST_CASE("in_column_span") {
    SparseMatrix m = from_dense({{1, 0, 2}, {0, 1, 3}, {0, 0, 0}});
    auto [yes, cert] = in_column_span(m, {1, 0, 0});
    CHECK(yes);
    REQUIRE(cert.has_value());
    CHECK((*cert)[0] == 1);

    auto [no, nocert] = in_column_span(m, {0, 0, 1});
    CHECK_FALSE(no);
    CHECK_FALSE(nocert.has_value());

    // random rational combination of columns is always in the span
    std::mt19937 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        SparseMatrix a = random_matrix(rng, 8, 5, 50);
        std::vector<Rat> v(8, 0);
        for (int c = 0; c < 5; ++c) {
            Rat coef((int)(rng() % 7) - 3, 1 + (int)(rng() % 3));
            for (auto& [r, cc, val] : a.triplets)
                if (cc == c) v[r] += val * coef;
        }
        auto [ok, certv] = in_column_span(a, v);
        CHECK(ok);
    }
}

TEST_CASE("SMS round trip") {
    SparseMatrix m = from_dense({{5}});
    CHECK(export_sms(m) == "1 1 M\n1 1 5\n0 0 0\n");
    std::mt19937 rng(9);
    SparseMatrix a = random_matrix(rng, 7, 9, 40);
    a.n_rows = 7;
    SparseMatrix b = import_sms(export_sms(a));
    b.n_rows = a.n_rows;
    b.n_cols = a.n_cols;
    CHECK(export_sms(b) == export_sms(a));
    CHECK_THROWS(import_sms("2 2 M\n1 1 4\n"));
    CHECK_THROWS(import_sms("garbage"));
}
