#include "lieposet/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lieposet {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
    if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return bareiss_reduce(work);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    RationalMatrix work = m;
    Rational det;
    bareiss_reduce(work, &det);
    return det;
}

std::size_t modular_rank(const RationalMatrix& m, std::uint64_t prime) {
    using u128 = unsigned __int128;
    const std::size_t rows = m.rows(), cols = m.cols();
    const mpz_class p(static_cast<unsigned long>(prime));
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class den = 1;
        for (std::size_t c = 0; c < cols; ++c) den = lcm(den, mpz_class(m(r, c).get_den()));
        if (den % p == 0) throw Error(ErrorKind::OutOfRange, "prime divides a row denominator");
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class v = m(r, c).get_num() * (den / m(r, c).get_den());
            v %= p;
            if (v < 0) v += p;
            a[r][c] = v.get_ui();
        }
    }
    auto mulmod = [&](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(u128(x) * y % prime); };
    auto inverse = [&](std::uint64_t x) {
        std::uint64_t result = 1, e = prime - 2;
        for (; e; e >>= 1, x = mulmod(x, x))
            if (e & 1) result = mulmod(result, x);
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t inv = inverse(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = mulmod(a[r][c], inv);
            for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + prime - mulmod(f, a[rank][k])) % prime;
        }
        ++rank;
    }
    return rank;
}

bool is_nonsingular(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "nonsingularity of a non-square matrix");
    for (std::uint64_t prime : {2305843009213693951ull, 4611686018427387847ull}) {
        try {
            if (modular_rank(m, prime) == m.rows()) return true;
        } catch (const Error&) {
        }
    }
    return sgn(determinant(m)) != 0;
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
    RationalMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t k = r; k < rows; ++k)
            if (sgn(a(k, c)) != 0) {
                p = k;
                break;
            }
        if (p == rows) continue;
        a.swap_rows(p, r);
        const Rational inv = 1 / a(r, c);
        for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || sgn(a(k, c)) == 0) continue;
            const Rational f = a(k, c);
            for (std::size_t j = c; j < cols; ++j) a(k, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_skew_symmetric(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

Rational pfaffian(const RationalMatrix& m) {
    if (!is_skew_symmetric(m)) throw Error(ErrorKind::ShapeMismatch, "pfaffian needs a skew-symmetric matrix");
    const std::size_t n = m.rows();
    if (n % 2 != 0) throw Error(ErrorKind::ShapeMismatch, "pfaffian needs even size");
    RationalMatrix a = m;
    Rational result = 1;
    // Eliminate in pairs (k, k+1): bring a nonzero a(k, p) to a(k, k+1) by a
    // simultaneous row/column swap, then clear row/column k and k+1.
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t p = n;
        for (std::size_t j = k + 1; j < n; ++j)
            if (sgn(a(k, j)) != 0) {
                p = j;
                break;
            }
        if (p == n) return 0;
        if (p != k + 1) {
            a.swap_rows(p, k + 1);
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k + 1));
            result = -result;
        }
        const Rational pivot = a(k, k + 1);
        result *= pivot;
        // Subtract multiples of row/col k+1 and k from the remaining ones so
        // that a(k, j) = a(k+1, j) = 0 for j > k+1; this is a congruence
        // transformation with unit determinant.
        for (std::size_t j = k + 2; j < n; ++j) {
            const Rational f = a(k, j) / pivot;       // uses column k+1
            const Rational g = a(k + 1, j) / pivot;   // uses column k
            if (sgn(f) == 0 && sgn(g) == 0) continue;
            // column j -= f * column(k+1) - g * column(k) ... applied as a
            // congruence: v_j -> v_j - f v_{k+1} + g v_k
            for (std::size_t r = 0; r < n; ++r) a(r, j) += -f * a(r, k + 1) + g * a(r, k);
            for (std::size_t c = 0; c < n; ++c) a(j, c) += -f * a(k + 1, c) + g * a(k, c);
        }
    }
    return result;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
    if (v.size() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
    return out;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
    // Incremental echelon basis keyed by leading column. Each incoming row is
    // reduced against existing pivots; a surviving row becomes a new pivot.
    std::map<std::size_t, SparseRow> pivots;
    auto sort_row = [](SparseRow& row) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return sgn(e.second) == 0; }),
                  row.end());
    };
    // Shorter rows first keeps fill-in down.
    std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    for (SparseRow& row : rows) {
        sort_row(row);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const SparseRow& piv = it->second;
            const Rational f = row.front().second / piv.front().second;
            SparseRow merged;
            merged.reserve(row.size() + piv.size());
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    merged.push_back(std::move(row[a++]));
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    merged.emplace_back(piv[b].first, -f * piv[b].second);
                    ++b;
                } else {
                    Rational v = row[a].second - f * piv[b].second;
                    if (sgn(v) != 0) merged.emplace_back(row[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
        if (!row.empty()) {
            const std::size_t lead = row.front().first;
            pivots.emplace(lead, std::move(row));
        }
    }
    return pivots.size();
}

std::string to_text(const RationalMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << to_fraction(m(r, c));
        }
        out << '\n';
    }
    return out.str();
}

RationalMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string token;
        std::vector<Rational> row;
        while (ls >> token) row.push_back(parse_rational(token));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorKind::ParseError, "ragged matrix text");
        rows.push_back(std::move(row));
    }
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

}  // namespace lieposet
