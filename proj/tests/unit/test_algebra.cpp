#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lieposet/canonical.hpp"
#include "lieposet/error.hpp"
#include "lieposet/lie_algebra.hpp"

using namespace lieposet;

namespace {

Poset branching() { return make_poset(4, {{1, 2}, {2, 3}, {2, 4}}); }

LieAlgebra index_one_algebra() {
    auto e = [](int k, long c) { return SparseVector{{k, Rational(c)}}; };
    return build_raw(7, {{1, 4, e(4, 2)},
                         {2, 4, e(4, 1)},
                         {1, 5, e(5, 1)},
                         {2, 5, e(5, 2)},
                         {3, 5, e(5, 1)},
                         {1, 6, e(6, 1)},
                         {3, 6, e(6, 1)},
                         {2, 7, e(7, 1)},
                         {3, 7, e(7, 2)}});
}

Functional phi_p0() {
    Functional phi;
    phi.add(2, 2).add(1, 3).add(2, 3);
    return phi;
}

}  // namespace

TEST_CASE("type-A construction") {
    CHECK(build_type_a(branching()).dim() == 8);
    CHECK(build_type_a(chain(3)).dim() == 5);
    const LieAlgebra g = build_type_a(chain(2));
    REQUIRE(g.dim() == 2);
    CHECK(g.basis()[0] == BasisLabel::diag_diff(2));
    CHECK(g.basis()[1] == BasisLabel::elem(1, 2));
    CHECK(g.bracket(0, 1) == SparseVector{{1, Rational(2)}});
    CHECK_THROWS_AS(build_type_a(antichain(1)), Error);
}

TEST_CASE("dimension formula and Jacobi over enumerated posets") {
    for (int n = 2; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n, 9, false)) {
            const LieAlgebra g = build_type_a(p);
            CHECK(g.dim() == n - 1 + static_cast<int>(p.relation_count()));
            CHECK_FALSE(g.jacobi_violation().has_value());
            for (int i = 0; i < g.dim(); ++i)
                for (int j = 0; j < g.dim(); ++j) {
                    SparseVector neg = g.bracket(j, i);
                    for (auto& t : neg) t.second = -t.second;
                    CHECK(g.bracket(i, j) == neg);
                }
        }
}

TEST_CASE("raw algebras") {
    CHECK(index_one_algebra().dim() == 7);
    CHECK(build_raw(3, {{1, 2, {{3, Rational(1)}}}}).dim() == 3);
    const LieAlgebra ab = build_raw(2, {});
    CHECK(ab.bracket(0, 1).empty());
    // [e1,e2]=e2, [e1,e3]=e1 fails Jacobi on (1,2,3) together with [e2,e3]=e3.
    CHECK_THROWS_AS(build_raw(3, {{1, 2, {{2, Rational(1)}}}, {1, 3, {{1, Rational(1)}}}, {2, 3, {{3, Rational(1)}}}}),
                    Error);
}

TEST_CASE("Kirillov and extended matrices") {
    const LieAlgebra g2 = build_type_a(chain(2));
    Functional e12;
    e12.add(1, 2);
    const RationalMatrix b = kirillov_matrix(g2, e12);
    CHECK(b(0, 1) == 2);
    CHECK(b(1, 0) == -2);
    CHECK(b(0, 0) == 0);
    CHECK(rank(kirillov_matrix(g2, Functional{})) == 0);
    CHECK_THROWS_AS(extended_matrix(g2, e12), Error);

    const LieAlgebra g = build_type_a(chain(3));
    CHECK(rank(kirillov_matrix(g, phi_p0())) == 4);
    const RationalMatrix ext = extended_matrix(g, phi_p0());
    CHECK(is_skew_symmetric(ext));
    CHECK(ext(0, 0) == 0);
    const DualVector values = g.dual_vector(phi_p0());
    for (int k = 0; k < g.dim(); ++k) CHECK(ext(0, static_cast<std::size_t>(k) + 1) == values[k]);
    CHECK(sgn(determinant(ext)) != 0);
    CHECK(sgn(determinant(extended_matrix(g, Functional{}))) == 0);
}

TEST_CASE("Kirillov matrices are skew") {
    std::mt19937_64 rng(5);
    const LieAlgebra g = build_type_a(branching());
    for (int t = 0; t < 5; ++t) CHECK(is_skew_symmetric(kirillov_matrix(g, random_dual_vector(g.dim(), rng, 9))));
}

TEST_CASE("index") {
    CHECK(index(build_type_a(chain(3)), 3, 1).index == 1);
    const IndexReport f = index(index_one_algebra(), 3, 1);
    CHECK(f.index == 1);
    CHECK(f.certified);
    CHECK(index(build_raw(3, {}), 3, 1).index == 3);
    const IndexReport big = index(build_type_a(complete_poset({2, 2, 2})), 3, 9);
    CHECK_FALSE(big.certified);
    CHECK(big.failure_bound > 0.0);
    CHECK(big.failure_bound < 1e-12);
}

TEST_CASE("index formula") {
    CHECK(index_formula_h2(branching()) == 0);
    CHECK(index_formula_h2(chain(3)) == 1);
    CHECK(index_formula_h2(antichain(2)) == 1);
    CHECK_THROWS_AS(index_formula_h2(chain(4)), Error);
    CHECK(is_frobenius_h2(complete_poset({1, 1, 2})));
    CHECK_FALSE(is_frobenius_h2(chain(3)));
}

TEST_CASE("final poset of the gluing illustration") {
    // Read off the drawing: minima 1,2,3, middles 4,5, maxima 6..9. Its Ext
    // Hasse diagram has the cycle 1-7-2-8-3-9, and both index oracles give 1.
    const Poset p = make_poset(9, {{1, 4}, {4, 6}, {4, 7}, {2, 7}, {2, 8}, {5, 8}, {3, 5}, {1, 9}, {5, 9}});
    CHECK(p.height() == 2);
    CHECK(p.is_connected());
    CHECK(index_formula_h2(p) == 1);
    CHECK(index(build_type_a(p), 3, 17).index == 1);
    CHECK_FALSE(is_frobenius_h2(p));
}

TEST_CASE("index formula agrees with symbolic rank for n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n, 2, false)) {
            const LieAlgebra g = build_type_a(p);
            if (g.dim() > kSymbolicIndexDim) continue;
            CHECK(g.dim() - symbolic_kirillov_rank(g) == index_formula_h2(p));
            CHECK(is_frobenius_h2(p) == (index_formula_h2(p) == 0));
        }
}

TEST_CASE("center") {
    CHECK(center(build_type_a(branching())).empty());
    const LieAlgebra g = build_type_a(disjoint_sum(chain(2), chain(2)));
    const auto z = center(g);
    REQUIRE(z.size() == 1);
    GlElement expected{{{1, 1}, 2}, {{2, 2}, 2}, {{3, 3}, -2}, {{4, 4}, -2}};
    const RationalVector coords = g.from_gl(expected);
    for (int i = 0; i < g.dim(); ++i) {
        RationalVector b(static_cast<std::size_t>(g.dim()));
        b[i] = 1;
        for (const Rational& x : g.bracket(coords, b)) CHECK(sgn(x) == 0);
    }
    // coords is a multiple of the computed generator.
    std::size_t k = 0;
    while (sgn(z[0][k]) == 0) ++k;
    const Rational s = coords[k] / z[0][k];
    for (int i = 0; i < g.dim(); ++i) CHECK(coords[i] == s * z[0][i]);
    CHECK(center(build_raw(3, {})).size() == 3);
}

TEST_CASE("gl round trip") {
    const LieAlgebra g = build_type_a(branching());
    std::mt19937_64 rng(6);
    const RationalVector v = random_dual_vector(g.dim(), rng, 20);
    CHECK(g.from_gl(g.to_gl(v)) == v);
    CHECK_THROWS_AS(g.from_gl({{{1, 1}, 1}}), Error);
    CHECK_THROWS_AS(g.from_gl({{{3, 4}, 1}}), Error);
}

TEST_CASE("cohomology") {
    CHECK(ce_cohomology_dims(build_type_a(chain(3))).h2 == 0);
    const CohomologyDims a1 = ce_cohomology_dims(build_raw(1, {}));
    CHECK(a1.h0 == 1);
    CHECK(a1.h1 == 1);
    CHECK(a1.h2 == 0);
    CHECK(ce_cohomology_dims(build_type_a(complete_poset({1, 1, 2}))).h2 == 0);
    // Abelian: every cochain is a cocycle, dim H^k = d * C(d, k).
    const CohomologyDims a3 = ce_cohomology_dims(build_raw(3, {}));
    CHECK(a3.h0 == 3);
    CHECK(a3.h1 == 9);
    CHECK(a3.h2 == 9);
    // H^0 with adjoint coefficients is the center.
    const LieAlgebra g = build_type_a(disjoint_sum(chain(2), chain(2)));
    CHECK(ce_cohomology_dims(g).h0 == static_cast<int>(center(g).size()));
    CHECK_THROWS_AS(ce_cohomology_dims(build_raw(15, {})), Error);
}
