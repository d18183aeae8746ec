#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "lieposet/error.hpp"
#include "lieposet/poset.hpp"

using namespace lieposet;

namespace {

Poset branching() { return make_poset(4, {{1, 2}, {2, 3}, {2, 4}}); }
Poset ext_cycle_poset() { return make_poset(6, {{1, 3}, {1, 4}, {3, 5}, {4, 5}, {4, 6}, {2, 4}}); }
Poset square() { return make_poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

std::set<Relation> rel_set(const Poset& p) {
    const auto r = p.relations();
    return {r.begin(), r.end()};
}

}  // namespace

TEST_CASE("make_poset closes generators") {
    CHECK(rel_set(branching()) == std::set<Relation>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(make_poset(3, {}).relation_count() == 0);
    const Poset h1 = make_poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(h1.relation_count() == 4);
    CHECK(h1.height() == 1);
}

TEST_CASE("make_poset rejects bad input") {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind([] { make_poset(3, {{2, 1}}); }) == ErrorKind::LabelOrderViolation);
    CHECK(kind([] { make_poset(3, {{2, 2}}); }) == ErrorKind::LabelOrderViolation);
    CHECK(kind([] { make_poset(3, {{1, 4}}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("closure is idempotent") {
    const Poset p = ext_cycle_poset();
    CHECK(make_poset(p.size(), p.relations()) == p);
}

TEST_CASE("extremal data") {
    const ExtremalData e = extremal_data(branching());
    CHECK(e.ext == std::vector<Element>{1, 3, 4});
    CHECK(e.rel_e == std::vector<Relation>{{1, 3}, {1, 4}});
    CHECK(e.interior == std::vector<Element>{2});

    const ExtremalData a = extremal_data(antichain(3));
    CHECK(a.ext == std::vector<Element>{1, 2, 3});
    CHECK(a.rel_e.empty());

    const ExtremalData c = extremal_data(chain(3));
    CHECK(c.ext == std::vector<Element>{1, 3});
    CHECK(c.rel_e == std::vector<Relation>{{1, 3}});
    CHECK(c.interior == std::vector<Element>{2});
}

TEST_CASE("up_down") {
    const UpDown u = up_down(branching(), 2);
    CHECK(u.down == 1);
    CHECK(u.up == 2);
    CHECK(u.ud == 1);
    CHECK(up_down(chain(3), 2).ud == 2);
    const UpDown a = up_down(antichain(3), 1);
    CHECK(a.down == 0);
    CHECK(a.up == 0);
    CHECK(a.ud == 2);
}

TEST_CASE("interior neighbourhoods") {
    NeighborhoodShape s;
    CHECK(interior_neighborhood(branching(), 2, &s) == complete_poset({1, 1, 2}));
    CHECK(s.below == 1);
    CHECK(s.above == 2);
    CHECK(interior_neighborhood(chain(3), 2) == chain(3));
    interior_neighborhood(ext_cycle_poset(), 4, &s);
    CHECK(s.below == 2);
    CHECK(s.above == 2);
    CHECK_THROWS_AS(interior_neighborhood(chain(3), 1), Error);
    CHECK_THROWS_AS(interior_neighborhood(chain(4), 2), Error);
}

TEST_CASE("interior neighbourhood shape matches up/down counts") {
    const Poset p = ext_cycle_poset();
    for (Element i : extremal_data(p).interior) {
        NeighborhoodShape s;
        const Poset nb = interior_neighborhood(p, i, &s);
        CHECK(nb == complete_poset({s.below, 1, s.above}));
    }
}

TEST_CASE("complete posets") {
    CHECK(complete_poset({1, 1}) == chain(2));
    const Poset p = complete_poset({2, 1, 1});
    CHECK(rel_set(p) == std::set<Relation>{{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(complete_poset({1, 1, 2}) == branching());
}

TEST_CASE("disjoint sums") {
    const Poset s = disjoint_sum(chain(2), chain(2));
    CHECK(rel_set(s) == std::set<Relation>{{1, 2}, {3, 4}});
    CHECK(s.components() == 2);
    const Poset p = ext_cycle_poset();
    const Poset q = complete_poset({1, 1, 2});
    const Poset pq = disjoint_sum(p, q);
    CHECK(pq.components() == p.components() + q.components());
    CHECK(pq.relation_count() == p.relation_count() + q.relation_count());
    CHECK(disjoint_sum(p, antichain(1)).size() == 7);
}

TEST_CASE("hasse data") {
    const HasseData h = branching().hasse();
    CHECK(h.covers == std::vector<Relation>{{1, 2}, {2, 3}, {2, 4}});
    CHECK(h.components == 1);
    CHECK(branching().height() == 2);
    CHECK(antichain(3).hasse().covers.empty());
    CHECK(antichain(3).components() == 3);
    CHECK(antichain(3).height() == 0);
}

TEST_CASE("forest checks") {
    const ForestCheck r = is_forest(square(), false);
    CHECK_FALSE(r.is_forest);
    CHECK(same_cycle(r.cycle, {1, 4, 2, 3}));
    CHECK(is_forest(chain(3), true).is_forest);
    const ForestCheck l = is_forest(ext_cycle_poset(), true);
    CHECK_FALSE(l.is_forest);
    CHECK(l.cycle.size() == 4);
    const ForestCheck full = is_forest(ext_cycle_poset(), false);
    CHECK(same_cycle(full.cycle, {1, 3, 5, 4}));
}

TEST_CASE("induced subposets relabel naturally") {
    const Poset p = ext_cycle_poset();
    const Poset sub = p.induced({2, 4, 6});
    CHECK(sub == chain(3));
}
