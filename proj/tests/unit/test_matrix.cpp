#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "lieposet/error.hpp"
#include "lieposet/matrix.hpp"
#include "lieposet/polynomial.hpp"

using namespace lieposet;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

// Leibniz expansion.
Rational leibniz(const RationalMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<int> d(-bound, bound);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + bound) % 3);
    return m;
}

RationalMatrix random_skew(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = d(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("small examples") {
    const RationalMatrix m = from_rows({{0, 2}, {-2, 0}});
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 4);
    CHECK(pfaffian(m) == 2);
    const RationalMatrix z(3, 3);
    CHECK(rank(z) == 0);
    CHECK(kernel(z).size() == 3);
}

TEST_CASE("determinant agrees with Leibniz expansion on 6x6 matrices") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const RationalMatrix m = random_matrix(6, 6, rng);
        CHECK(determinant(m) == leibniz(m));
    }
    RationalMatrix singular = random_matrix(6, 6, rng);
    for (std::size_t c = 0; c < 6; ++c) singular(5, c) = singular(0, c) * 3 - singular(2, c);
    CHECK(determinant(singular) == 0);
    CHECK(leibniz(singular) == 0);
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937_64 rng(2);
    for (std::size_t n : {2u, 4u, 6u, 8u})
        for (int t = 0; t < 10; ++t) {
            const RationalMatrix m = random_skew(n, rng);
            const Rational pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
        }
    // A matrix whose elimination needs a pivot swap.
    RationalMatrix m = from_rows({{0, 0, 1, 2}, {0, 0, 3, 4}, {-1, -3, 0, 5}, {-2, -4, -5, 0}});
    CHECK(pfaffian(m) == 0 * 5 - 1 * 4 + 2 * 3);
}

TEST_CASE("rank plus nullity and kernel correctness") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = 1 + t % 6, c = 1 + (t * 7) % 8;
        RationalMatrix m = random_matrix(r, c, rng, 2);
        if (t % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
        const auto ker = kernel(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& v : ker)
            for (const Rational& x : multiply(m, v)) CHECK(sgn(x) == 0);
    }
}

TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        RationalMatrix m = random_matrix(7, 9, rng, 1);
        std::vector<SparseRow> rows(7);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                if (sgn(m(i, j)) != 0) rows[i].emplace_back(j, m(i, j));
        CHECK(sparse_rank(rows) == rank(m));
    }
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), Error);
    CHECK_THROWS_AS(pfaffian(from_rows({{1, 2}, {3, 4}})), Error);
    CHECK_THROWS_AS(pfaffian(RationalMatrix(3, 3)), Error);
}

TEST_CASE("matrix text round trip") {
    RationalMatrix m = from_rows({{0, 2}, {-2, 0}});
    m(0, 0) = Rational(1, 3);
    const std::string text = to_text(m);
    CHECK(text == "1/3 2/1\n-2/1 0/1\n");
    CHECK(parse_matrix_text(text) == m);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
    const Polynomial p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);
    CHECK(p.divided_by(x + y) == x - y);
    CHECK(p.evaluate({Rational(3), Rational(2)}) == 5);
    CHECK((p - p).is_zero());
    CHECK_THROWS(p.divided_by(x + y + Polynomial(1)));
}

TEST_CASE("polynomial Bareiss determinant matches evaluation") {
    // det [[x, y], [y, x]] = x^2 - y^2.
    const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
    Matrix<Polynomial> m(2, 2);
    m(0, 0) = x;
    m(0, 1) = y;
    m(1, 0) = y;
    m(1, 1) = x;
    Polynomial det;
    CHECK(bareiss_reduce(m, &det) == 2);
    CHECK(det == x * x - y * y);
}
