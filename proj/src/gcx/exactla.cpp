#include "exactla.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcx {

namespace {

// Integer row-major copy; each row scaled by the lcm of its denominators
// (rank and span are unaffected by row scaling).
std::vector<std::map<int, Int>> integer_rows(const SparseMatrix& m) {
    std::vector<std::map<int, Rat>> rows(m.n_rows);
    for (auto& [r, c, v] : m.triplets) {
        if (r < 0 || r >= m.n_rows || c < 0 || c >= m.n_cols)
            throw std::out_of_range("triplet outside matrix");
        if (rows[r].count(c)) throw std::invalid_argument("duplicate triplet");
        if (v != 0) rows[r][c] = v;
    }
    std::vector<std::map<int, Int>> out(m.n_rows);
    for (int r = 0; r < m.n_rows; ++r) {
        Int l = 1;
        for (auto& [c, v] : rows[r]) l = lcm(l, denominator(v));
        for (auto& [c, v] : rows[r]) out[r][c] = numerator(v) * (l / denominator(v));
    }
    return out;
}

} // namespace

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t;
    t.n_rows = n_cols;
    t.n_cols = n_rows;
    t.row_basis = col_basis;
    t.col_basis = row_basis;
    for (auto& [r, c, v] : triplets) t.triplets.emplace_back(c, r, v);
    return t;
}

long rank_sparse(const SparseMatrix& m) {
    auto rows = integer_rows(m);
    std::set<int> active_rows;
    for (int r = 0; r < m.n_rows; ++r)
        if (!rows[r].empty()) active_rows.insert(r);
    std::vector<char> col_done(m.n_cols, 0);
    Int prev = 1;
    long rank = 0;
    while (!active_rows.empty()) {
        // Markowitz pivot: minimize (nnz(row)-1) * (nnz(col)-1)
        std::map<int, long> colcount;
        for (int r : active_rows)
            for (auto& [c, v] : rows[r]) ++colcount[c];
        long best_score = -1;
        int pr = -1, pc = -1;
        for (int r : active_rows)
            for (auto& [c, v] : rows[r]) {
                long score = (long)(rows[r].size() - 1) * (colcount[c] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        Int piv = rows[pr][pc];
        std::vector<int> touched;
        for (int r : active_rows) {
            if (r == pr) continue;
            // Fraction-free one-step update applies to every remaining row,
            // including pivot-column zeros (pure rescaling by piv/prev).
            Int factor = rows[r].count(pc) ? rows[r][pc] : Int(0);
            std::map<int, Int> nr;
            // union of supports
            auto& a = rows[r];
            auto& p = rows[pr];
            for (auto& [c, v] : a) {
                Int nv = v * piv - (p.count(c) ? p.at(c) * factor : Int(0));
                if (nv != 0) nr[c] = nv / prev;
            }
            for (auto& [c, v] : p) {
                if (a.count(c)) continue;
                Int nv = -v * factor;
                if (nv != 0) nr[c] = nv / prev;
            }
            nr.erase(pc);
            rows[r] = std::move(nr);
            if (rows[r].empty()) touched.push_back(r);
        }
        active_rows.erase(pr);
        for (int r : touched) active_rows.erase(r);
        col_done[pc] = 1;
        prev = piv;
        ++rank;
    }
    return rank;
}

long rank_dense(const SparseMatrix& m) {
    auto rows = integer_rows(m);
    std::vector<std::vector<Int>> a(m.n_rows, std::vector<Int>(m.n_cols, 0));
    for (int r = 0; r < m.n_rows; ++r)
        for (auto& [c, v] : rows[r]) a[r][c] = v;
    Int prev = 1;
    long rank = 0;
    int row = 0;
    for (int col = 0; col < m.n_cols && row < m.n_rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.n_rows; ++r)
            if (a[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        Int piv = a[row][col];
        for (int r = row + 1; r < m.n_rows; ++r) {
            for (int c = col + 1; c < m.n_cols; ++c)
                a[r][c] = (a[r][c] * piv - a[r][col] * a[row][c]) / prev;
            a[r][col] = 0;
        }
        prev = piv;
        ++row;
        ++rank;
    }
    return rank;
}

long rank_mod_p(const SparseMatrix& m, long p) {
    auto rows = integer_rows(m);
    std::vector<std::vector<long>> a(m.n_rows, std::vector<long>(m.n_cols, 0));
    for (int r = 0; r < m.n_rows; ++r)
        for (auto& [c, v] : rows[r]) {
            Int red = v % p;
            long x = red.convert_to<long>();
            a[r][c] = ((x % p) + p) % p;
        }
    auto inv = [&](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    long rank = 0;
    int row = 0;
    for (int col = 0; col < m.n_cols && row < m.n_rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.n_rows; ++r)
            if (a[r][col]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        long pi = inv(a[row][col]);
        for (int r = row + 1; r < m.n_rows; ++r) {
            if (!a[r][col]) continue;
            long f = a[r][col] * pi % p;
            for (int c = col; c < m.n_cols; ++c)
                a[r][c] = ((a[r][c] - f * a[row][c]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::pair<bool, std::optional<std::vector<Rat>>> in_column_span(const SparseMatrix& m,
                                                                const std::vector<Rat>& v) {
    if ((int)v.size() != m.n_rows) throw std::invalid_argument("vector length != n_rows");
    int R = m.n_rows, C = m.n_cols;
    std::vector<std::vector<Rat>> a(R, std::vector<Rat>(C + 1, 0));
    for (auto& [r, c, val] : m.triplets) a[r][c] = val;
    for (int r = 0; r < R; ++r) a[r][C] = v[r];
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int pr = -1;
        for (int r = row; r < R; ++r)
            if (a[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        Rat piv = a[row][col];
        for (int c = col; c <= C; ++c) a[row][c] /= piv;
        for (int r = 0; r < R; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c <= C; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < R; ++r)
        if (a[r][C] != 0) {
            // inconsistent: v adds one to the rank
            SparseMatrix aug = m;
            aug.n_cols = C + 1;
            for (int i = 0; i < R; ++i)
                if (v[i] != 0) aug.triplets.emplace_back(i, C, v[i]);
            if (rank_sparse(aug) != rank_sparse(m) + 1)
                throw std::logic_error("in_column_span: rank certificate failed");
            return {false, std::nullopt};
        }
    std::vector<Rat> cert(C, 0);
    for (size_t i = 0; i < pivot_col.size(); ++i) cert[pivot_col[i]] = a[i][C];
    // verify M*cert = v exactly
    std::vector<Rat> chk(R, 0);
    for (auto& [r, c, val] : m.triplets) chk[r] += val * cert[c];
    for (int r = 0; r < R; ++r)
        if (chk[r] != v[r]) throw std::logic_error("in_column_span: certificate failed");
    return {true, cert};
}

std::string export_sms(const SparseMatrix& m) {
    std::ostringstream os;
    os << m.n_rows << " " << m.n_cols << " M\n";
    auto trip = m.triplets;
    std::sort(trip.begin(), trip.end(), [](auto& x, auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) <
               std::tie(std::get<0>(y), std::get<1>(y));
    });
    for (auto& [r, c, v] : trip) {
        os << r + 1 << " " << c + 1 << " " << numerator(v);
        if (denominator(v) != 1) os << "/" << denominator(v);
        os << "\n";
    }
    os << "0 0 0\n";
    return os.str();
}

SparseMatrix import_sms(const std::string& text) {
    std::istringstream is(text);
    SparseMatrix m;
    std::string tag;
    if (!(is >> m.n_rows >> m.n_cols >> tag) || tag != "M")
        throw std::invalid_argument("bad SMS header");
    bool terminated = false;
    long r, c;
    std::string val;
    while (is >> r >> c >> val) {
        if (r == 0 && c == 0 && val == "0") {
            terminated = true;
            break;
        }
        Rat v;
        auto slash = val.find('/');
        if (slash == std::string::npos) v = Rat(Int(val));
        else v = Rat(Int(val.substr(0, slash)), Int(val.substr(slash + 1)));
        m.triplets.emplace_back((int)r - 1, (int)c - 1, v);
    }
    if (!terminated) throw std::invalid_argument("SMS input missing terminator");
    return m;
}

} // namespace gcx
