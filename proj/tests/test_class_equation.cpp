#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "starfree/class_equation.hpp"
#include "starfree/commuting_graph.hpp"
#include "starfree/group.hpp"
#include "test_groups_common.hpp"

using namespace starfree;

namespace {

std::vector<long long> orders_of(const std::vector<ClassEquationSolution>& solutions) {
  std::vector<long long> out;
  for (const auto& s : solutions) out.push_back(s.order);
  return out;
}

}  // namespace

TEST_CASE("solver golden values") {
  SUBCASE("sizes {2,3}, trivial center") {
    const auto solutions = solve_class_equation({2, 3}, 1);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0].order == 6);
    CHECK(solutions[0].multiplicities == std::vector<int>{1, 1});
  }
  SUBCASE("sizes {2,4}: the arithmetic order 4 fails the strictness filter") {
    CHECK(solve_class_equation({2, 4}, 1).empty());
  }
  SUBCASE("sizes {2,5}: the dihedral group of order 10") {
    const auto solutions = solve_class_equation({2, 5}, 1);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0].order == 10);
    CHECK(solutions[0].multiplicities == std::vector<int>{1, 2});
  }
  SUBCASE("sizes {3,4}: order 12 only") {
    const auto solutions = solve_class_equation({3, 4}, 1);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0].order == 12);
    CHECK(solutions[0].multiplicities == std::vector<int>{2, 1});
  }
  SUBCASE("sizes {4,5}: order 20 only") {
    const auto solutions = solve_class_equation({4, 5}, 1);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0].order == 20);
    CHECK(solutions[0].multiplicities == std::vector<int>{3, 1});
  }
  SUBCASE("sizes {3,4,5}: order 60 only, multiplicities fixed by the enumeration") {
    const auto solutions = solve_class_equation({3, 4, 5}, 1);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0].order == 60);
    CHECK(solutions[0].multiplicities == std::vector<int>{1, 1, 2});
  }
  SUBCASE("sizes {4,6}, center 2: two realizable solutions and one ghost") {
    const auto solutions = solve_class_equation({4, 6}, 2);
    REQUIRE(solutions.size() == 3);
    CHECK(solutions[0].order == 12);
    CHECK(solutions[0].multiplicities == std::vector<int>{2, 2});
    CHECK(solutions[1].order == 24);
    CHECK(solutions[1].multiplicities == std::vector<int>{1, 4});
    CHECK(solutions[2].order == 24);
    CHECK(solutions[2].multiplicities == std::vector<int>{3, 1});
  }
  SUBCASE("single size with trivial center never has a solution") {
    for (int m = 2; m <= 12; ++m) CHECK(solve_class_equation({m}, 1).empty());
  }
  SUBCASE("sizes {4}, center 2: order 8 only") {
    CHECK(orders_of(solve_class_equation({4}, 2)) == std::vector<long long>{8});
  }
  SUBCASE("sizes {6}, center 3: order 18 survives the filters") {
    const auto solutions = solve_class_equation({6}, 3);
    CHECK(orders_of(solutions) == std::vector<long long>{18});
    CHECK(solutions[0].multiplicities == std::vector<int>{5});
  }
  SUBCASE("sizes {8}, center 4: orders 16 and 32") {
    const auto solutions = solve_class_equation({8}, 4);
    CHECK(orders_of(solutions) == std::vector<long long>{16, 32});
    CHECK(solutions[0].multiplicities == std::vector<int>{6});
    CHECK(solutions[1].multiplicities == std::vector<int>{7});
  }
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(solve_class_equation({}, 1), InvalidSizesError);
  CHECK_THROWS_AS(solve_class_equation({2, 2}, 1), InvalidSizesError);
  CHECK_THROWS_AS(solve_class_equation({4, 3}, 1), InvalidSizesError);
  CHECK_THROWS_AS(solve_class_equation({2}, 2), InvalidSizesError);
  CHECK_THROWS_AS(solve_class_equation({3, 4}, 2), InvalidSizesError);
  CHECK_THROWS_AS(solve_class_equation({4}, 0), InvalidSizesError);
}

TEST_CASE("solve agrees with the order-scan oracle") {
  // Every size set the k <= 6 enumeration can touch, plus larger probes.
  for (int z = 1; z <= 6; ++z) {
    std::vector<int> admissible;
    for (int s = 2 * z; s <= 6 + z; s += z) admissible.push_back(s);
    const size_t count = admissible.size();
    for (size_t mask = 1; mask < (size_t{1} << count); ++mask) {
      std::vector<int> sizes;
      for (size_t bit = 0; bit < count; ++bit) {
        if (mask & (size_t{1} << bit)) sizes.push_back(admissible[bit]);
      }
      CAPTURE(z);
      CAPTURE(sizes);
      CHECK(solve_class_equation(sizes, z) == oracles::solve_by_order_scan(sizes, z));
    }
  }

  for (const auto& [sizes, z] :
       std::vector<std::pair<std::vector<int>, int>>{{{2, 3, 7, 8}, 1},
                                                     {{2, 9, 12}, 1},
                                                     {{4, 10, 12}, 2},
                                                     {{6, 9, 12}, 3},
                                                     {{10}, 5},
                                                     {{7, 11, 12}, 1}}) {
    CAPTURE(sizes);
    CHECK(solve_class_equation(sizes, z) == oracles::solve_by_order_scan(sizes, z));
  }
}

TEST_CASE("every solution satisfies the class equation exactly") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& tuple : enumerate_candidates(k).tuples) {
      for (const auto& s : tuple.solutions) {
        long long sum = 0;
        for (size_t i = 0; i < s.sizes.size(); ++i) {
          CHECK(s.order % s.sizes[i] == 0);
          CHECK(s.sizes[i] % s.center == 0);
          CHECK(s.center < s.sizes[i]);
          CHECK(s.sizes[i] < s.order);
          sum += static_cast<long long>(s.multiplicities[i]) * (s.order / s.sizes[i]);
        }
        CHECK(sum == s.order - s.center);
      }
    }
  }
}

TEST_CASE("candidate enumeration") {
  SUBCASE("k=1 admits nothing") {
    CHECK(enumerate_candidates(1).tuples.empty());
  }
  SUBCASE("k=2 gives exactly the order-6 and order-8 tuples") {
    const CandidateSet set = enumerate_candidates(2);
    REQUIRE(set.tuples.size() == 2);
    CHECK(set.tuples[0].center == 1);
    CHECK(set.tuples[0].sizes == std::vector<int>{2, 3});
    CHECK(set.tuples[1].center == 2);
    CHECK(set.tuples[1].sizes == std::vector<int>{4});
    CHECK(set.candidate_orders() == std::vector<long long>{6, 8});
  }
  SUBCASE("k=3 candidate orders") {
    CHECK(enumerate_candidates(3).candidate_orders() ==
          std::vector<long long>{6, 8, 12, 18});
  }
  SUBCASE("k=4 candidate orders: order 32 is the lone out-of-catalog entry") {
    CHECK(enumerate_candidates(4).candidate_orders() ==
          std::vector<long long>{6, 8, 10, 12, 15, 16, 18, 20, 24, 32, 60});
  }
  SUBCASE("k=5 candidate orders, pinned by the enumeration itself") {
    CHECK(enumerate_candidates(5).candidate_orders() ==
          std::vector<long long>{6, 8, 10, 12, 15, 16, 18, 20, 24, 30, 32, 50, 60});
  }
  SUBCASE("tuple counts are finite and non-decreasing in k") {
    size_t prev = 0;
    for (int k = 1; k <= 8; ++k) {
      const size_t count = enumerate_candidates(k).tuples.size();
      CHECK(count >= prev);
      prev = count;
    }
  }
  SUBCASE("tuple constraints") {
    for (int k = 1; k <= 6; ++k) {
      for (const auto& tuple : enumerate_candidates(k).tuples) {
        CHECK(tuple.center <= k);
        CHECK(static_cast<int>(tuple.sizes.size()) <= distinct_size_bound(k));
        for (int s : tuple.sizes) {
          CHECK(s > tuple.center);
          CHECK(s <= k + tuple.center);
          CHECK(s % tuple.center == 0);
        }
      }
    }
  }
}

TEST_CASE("distinct size bound") {
  CHECK(distinct_size_bound(1) == 2);
  CHECK(distinct_size_bound(3) == 6);
  CHECK(distinct_size_bound(5) == 10);
}

TEST_CASE("conjugacy counts") {
  ClassEquationSolution s3;
  s3.order = 6;
  s3.center = 1;
  s3.sizes = {2, 3};
  s3.multiplicities = {1, 1};
  CHECK(conjugacy_count(s3) == 3);

  // The alternating group on five points: its multiplicity vector comes from
  // the enumeration, and the count matches its five conjugacy classes.
  const auto a5 = solve_class_equation({3, 4, 5}, 1);
  REQUIRE(a5.size() == 1);
  CHECK(conjugacy_count(a5[0]) == 5);
  CHECK(static_cast<long long>(testgroups::a5().conjugacy_classes().size()) ==
        conjugacy_count(a5[0]));

  for (const auto& tuple : enumerate_candidates(5).tuples) {
    for (const auto& s : tuple.solutions) {
      CHECK(conjugacy_count(s) >= s.center + static_cast<long long>(s.sizes.size()));
    }
  }
}

TEST_CASE("profiles of known groups appear among the solutions") {
  // Soundness at the solver level: the computed profile of each sample group
  // solves the class equation for its own size set.
  for (const FiniteGroup& g : testgroups::non_abelian_sample()) {
    CAPTURE(g.label());
    const CentralizerProfile profile = g.centralizer_profile();
    const auto solutions = solve_class_equation(profile.sizes(), profile.center_order);
    ClassEquationSolution expected;
    expected.order = profile.group_order;
    expected.center = profile.center_order;
    expected.sizes = profile.sizes();
    expected.multiplicities = profile.multiplicities();
    CHECK(std::find(solutions.begin(), solutions.end(), expected) != solutions.end());
  }
}
