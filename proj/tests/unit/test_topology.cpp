#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lieposet/canonical.hpp"
#include "lieposet/error.hpp"
#include "lieposet/topology.hpp"

using namespace lieposet;

namespace {

Poset square() { return make_poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

Poset two_trees() {
    return make_poset(12, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
                           {7, 9}, {7, 10}, {8, 10}, {9, 11}, {9, 12}, {10, 12}});
}

MorseAssignment base_morse() {
    return {{{1}, 0}, {{2}, 2}, {{3}, 4}, {{1, 2}, 1}, {{1, 3}, 3}, {{2, 3}, 6}, {{1, 2, 3}, 5}};
}

std::size_t three_chains(const Poset& p) {
    std::size_t count = 0;
    for (const Relation& r : p.relations())
        for (Element c = 1; c <= p.size(); ++c) count += p.less(r.second, c);
    return count;
}

}  // namespace

TEST_CASE("order complexes") {
    const SimplicialComplex k = order_complex(chain(3));
    CHECK(k.face_count(0) == 3);
    CHECK(k.face_count(1) == 3);
    CHECK(k.face_count(2) == 1);
    const SimplicialComplex a = order_complex(antichain(3));
    CHECK(a.dimension() == 0);
    CHECK(a.face_count(0) == 3);
    const SimplicialComplex e = order_complex(make_poset(4, {{1, 2}, {2, 3}, {2, 4}}));
    CHECK(e.face_count(0) == 4);
    CHECK(e.face_count(1) == 5);
    CHECK(e.faces[2] == std::vector<Face>{{1, 2, 3}, {1, 2, 4}});
}

TEST_CASE("face counts and Euler characteristic over enumerated posets") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& p : enumerate_posets(n, 2, false)) {
            const SimplicialComplex k = order_complex(p);
            CHECK(k.face_count(0) == static_cast<std::size_t>(n));
            CHECK(k.face_count(1) == p.relation_count());
            CHECK(k.face_count(2) == three_chains(p));
            const auto b = betti_numbers(k, false);
            int alt = 0;
            for (std::size_t i = 0; i < b.size(); ++i) alt += (i % 2 ? -1 : 1) * b[i];
            CHECK(alt == k.euler_characteristic());
            CHECK(b[0] == p.components());
        }
}

TEST_CASE("betti numbers") {
    CHECK(betti_numbers(order_complex(chain(3)), false) == std::vector<int>{1, 0, 0});
    CHECK(betti_numbers(order_complex(square()), false) == std::vector<int>{1, 1});
    CHECK(betti_numbers(order_complex(two_trees()), false) == std::vector<int>{2, 0, 0});
    CHECK(betti_numbers(order_complex(chain(3)), true) == std::vector<int>{0, 0, 0});
    CHECK(betti_numbers(order_complex(square()), false, 2) == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(betti_numbers(order_complex(chain(6)), false), Error);
}

TEST_CASE("acyclicity") {
    CHECK_FALSE(verify_acyclic(square()));
    CHECK(verify_acyclic(chain(3)));
    CHECK_FALSE(verify_acyclic(two_trees()));
    CHECK_THROWS_AS(verify_acyclic(chain(4)), Error);
}

TEST_CASE("complexes from faces") {
    CHECK_THROWS_AS(complex_from_faces({{1, 2}}), Error);
    const SimplicialComplex k = complex_from_faces({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}});
    CHECK(betti_numbers(k, true) == std::vector<int>{0, 0, 0});
    const SimplicialComplex hollow = complex_from_faces({{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}});
    CHECK(betti_numbers(hollow, false) == std::vector<int>{1, 1});
}

TEST_CASE("Morse base case") {
    const SimplicialComplex k = order_complex(chain(3));
    CHECK(check_morse(k, base_morse()) == std::vector<Face>{{1}});
    CHECK(betti_numbers(k, true) == std::vector<int>{0, 0, 0});

    MorseAssignment swapped = base_morse();
    std::swap(swapped[{2, 3}], swapped[{1, 2, 3}]);
    CHECK(check_morse(k, swapped) == std::vector<Face>{{1}, {2, 3}, {1, 2, 3}});

    MorseAssignment dim;
    for (const auto& level : k.faces)
        for (const Face& f : level) dim[f] = static_cast<long>(f.size()) - 1;
    CHECK(check_morse(k, dim).size() == 7);

    MorseAssignment bad = base_morse();
    bad[{1}] = 10;  // v1 now exceeds both of its edges
    CHECK_THROWS_AS(check_morse(k, bad), Error);
    MorseAssignment partial = base_morse();
    partial.erase({1, 2, 3});
    CHECK_THROWS_AS(check_morse(k, partial), Error);
}
