#include "doctest.h"

#include "setmax/errors.hpp"
#include "setmax/independence.hpp"

using namespace setmax;

TEST_CASE("uniform matroid membership") {
    UniformMatroid u(4, 2);
    CHECK(u.is_independent(ElementSet{}));
    CHECK(u.is_independent(ElementSet{0, 3}));
    CHECK(!u.is_independent(ElementSet{0, 1, 2}));
    CHECK(u.extendibility() == 1);
    CHECK_THROWS_AS(u.is_independent(ElementSet{4}), invalid_instance_error);
}

TEST_CASE("partition matroid membership") {
    PartitionMatroid p(4, {ElementSet{0, 1}, ElementSet{2, 3}});
    CHECK(p.is_independent(ElementSet{0, 2}));
    CHECK(!p.is_independent(ElementSet{0, 1}));
    CHECK(p.is_independent(ElementSet{}));

    // Uncovered elements are unconstrained.
    PartitionMatroid q(4, {ElementSet{0, 1}});
    CHECK(q.is_independent(ElementSet{2, 3, 0}));

    // Per-part capacities.
    PartitionMatroid caps(4, {ElementSet{0, 1, 2}}, {2});
    CHECK(caps.is_independent(ElementSet{0, 1}));
    CHECK(!caps.is_independent(ElementSet{0, 1, 2}));

    CHECK_THROWS_AS(PartitionMatroid(4, {ElementSet{0, 1}, ElementSet{1, 2}}), invalid_instance_error);
    CHECK_THROWS_AS(PartitionMatroid(2, {ElementSet{0}}, {-1}), invalid_instance_error);
}

TEST_CASE("intersection system") {
    auto m1 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{0, 1}, ElementSet{2, 3}});
    auto m2 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{3, 0}});
    IntersectionSystem both(4, {m1, m2});
    CHECK(both.extendibility() == 2);
    CHECK(both.is_independent(ElementSet{0, 2}));
    CHECK(!both.is_independent(ElementSet{0, 1}));
    CHECK(!both.is_independent(ElementSet{0, 3}));
}

TEST_CASE("is_base") {
    UniformMatroid u(4, 2);
    CHECK(is_base(u, ElementSet{0, 1}));
    CHECK(!is_base(u, ElementSet{0}));
    CHECK(!is_base(u, ElementSet{}));
    CHECK_THROWS_AS(is_base(u, ElementSet{0, 1, 2}), parameter_error);

    UniformMatroid full(3, 3);
    CHECK(is_base(full, ElementSet{0, 1, 2}));

    // Query accounting: scanning costs at most n queries.
    UniformMatroid fresh(5, 2);
    const auto before = fresh.independence_queries();
    is_base(fresh, ElementSet{0, 1});
    CHECK(fresh.independence_queries() - before <= 5);
}

TEST_CASE("hereditary verification") {
    UniformMatroid u(5, 2);
    CHECK(verify_hereditary(u).hereditary);

    // Not hereditary: only the pair {0,1} and the empty set are "independent".
    CustomSystem weird(2, [](const ElementSet& s) { return s.empty() || s == ElementSet{0, 1}; }, 1);
    const auto report = verify_hereditary(weird);
    REQUIRE(!report.hereditary);
    CHECK(report.witness->first == ElementSet{0, 1});
}

TEST_CASE("matroid verification") {
    CHECK(verify_matroid(UniformMatroid(5, 3)).matroid);
    CHECK(verify_matroid(PartitionMatroid(5, {ElementSet{0, 1, 2}, ElementSet{3, 4}})).matroid);

    // Intersection of two partition matroids on a 4-cycle is not a matroid.
    auto m1 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{0, 1}, ElementSet{2, 3}});
    auto m2 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{3, 0}});
    IntersectionSystem cycle(4, {m1, m2});
    const auto report = verify_matroid(cycle);
    REQUIRE(!report.matroid);
    const auto& [s, t] = *report.witness;
    CHECK(s.size() > t.size());

    CHECK_THROWS_AS(verify_matroid(UniformMatroid(15, 3)), size_limit_error);
}

TEST_CASE("k-extendible verification") {
    // Every matroid is 1-extendible.
    CHECK(verify_k_extendible(UniformMatroid(5, 2), 1).extendible);
    CHECK(verify_k_extendible(PartitionMatroid(5, {ElementSet{0, 1, 2}, ElementSet{3, 4}}), 1).extendible);

    auto m1 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{0, 1}, ElementSet{2, 3}});
    auto m2 = std::make_shared<PartitionMatroid>(4, std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{3, 0}});
    IntersectionSystem cycle(4, {m1, m2});
    CHECK(verify_k_extendible(cycle, 2).extendible);

    // k-set-packing style system that is 2-extendible but not 1-extendible:
    // elements are the sets {a}, {b}, {a,b}; independence = pairwise disjoint.
    CustomSystem packing(3,
                         [](const ElementSet& s) {
                             if (s.contains(2) && (s.contains(0) || s.contains(1))) return false;
                             return true;
                         },
                         2);
    CHECK(verify_hereditary(packing).hereditary);
    CHECK(!verify_k_extendible(packing, 1).extendible);
    CHECK(verify_k_extendible(packing, 2).extendible);
}

TEST_CASE("k-system ratio") {
    // Matroids have ratio exactly 1 on every subset.
    CHECK(k_system_ratio_global(UniformMatroid(6, 3)) == Value(1));
    CHECK(k_system_ratio_global(PartitionMatroid(6, {ElementSet{0, 1, 2}, ElementSet{3, 4, 5}})) == Value(1));
    CHECK(k_system_ratio(UniformMatroid(6, 3), ElementSet::all(6)) == Value(1));
    CHECK(k_system_ratio(UniformMatroid(6, 3), ElementSet{}) == Value(1));

    // The packing system above has bases {a,b} and {ab} inside the full set.
    CustomSystem packing(3,
                         [](const ElementSet& s) {
                             if (s.contains(2) && (s.contains(0) || s.contains(1))) return false;
                             return true;
                         },
                         2);
    CHECK(k_system_ratio(packing, ElementSet::all(3)) == Value(2));
    CHECK(k_system_ratio_global(packing) == Value(2));
}
