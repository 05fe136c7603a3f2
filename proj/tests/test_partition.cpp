#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dmp/partition.hpp"
#include "oracles.hpp"

using namespace dmp;

TEST_CASE("frequency notation and multiplicity profile") {
  Partition p({3, 5, 0, 2});
  CHECK(p.total() == 21);
  CHECK(p.max_part() == 4);
  CHECK(p.multiplicity(2) == 5);
  CHECK(p.parts() == std::vector<unsigned>{4, 4, 2, 2, 2, 2, 2, 1, 1, 1});
  CHECK(multiplicity_profile(p).values == std::vector<unsigned>{2, 3, 5});
  CHECK(has_distinct_multiplicities(p));

  Partition q({1, 0, 1});  // 3 + 1
  CHECK_FALSE(has_distinct_multiplicities(q));
  CHECK(multiplicity_profile(q).values == std::vector<unsigned>{1, 1});
}

TEST_CASE("forbidden set") {
  ForbiddenSet s{3, 1, 3};
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.with(2) == ForbiddenSet{1, 2, 3});
  CHECK(s.restricted_to(2) == ForbiddenSet{1});
  CHECK_THROWS_AS(ForbiddenSet({0u, 1u}), std::invalid_argument);
}

TEST_CASE("enumeration order for n=4, m=2") {
  std::vector<std::vector<unsigned>> seen;
  for (const auto& p : enumerate_partitions(4, 2)) seen.push_back(p.parts());
  CHECK(seen == std::vector<std::vector<unsigned>>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("enumerator matches recursive generator") {
  for (unsigned n = 0; n <= 22; ++n)
    for (unsigned m = 1; m <= n + 1; ++m) {
      std::vector<std::vector<unsigned>> seen;
      for (const auto& p : enumerate_partitions(n, m)) {
        CHECK(p.total() == n);
        CHECK(p.max_part() == m);
        seen.push_back(p.parts());
      }
      auto expected = oracle::partitions(n, m);
      // Both are descending lexicographic.
      CHECK(seen == expected);
    }
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_count(5, 5) == 5);
  CHECK(brute_force_count(5, 1, {5}) == 0);
  CHECK(brute_force_count(5, 1) == 1);
  CHECK(brute_force_count(3, 2) == 1);
  CHECK(brute_force_count(0, 1) == 1);
}

TEST_CASE("brute force matches independent oracle") {
  const std::vector<std::vector<unsigned>> sets{{}, {1}, {2}, {1, 3}, {2, 3}};
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned m = 1; m <= std::max(n, 1u); ++m)
      for (const auto& s : sets)
        CHECK(brute_force_count(n, m, ForbiddenSet(s)) == oracle::distinct_count(n, m, s));
}

TEST_CASE("monotone in m and antitone in S") {
  for (unsigned n = 1; n <= 18; ++n) {
    for (unsigned m = 1; m < n; ++m) CHECK(brute_force_count(n, m) <= brute_force_count(n, m + 1));
    CHECK(brute_force_count(n, n, {1, 2}) <= brute_force_count(n, n, {1}));
    CHECK(brute_force_count(n, n, {1}) <= brute_force_count(n, n));
    // Forbidding values above n changes nothing.
    CHECK(brute_force_count(n, n, {n + 1}) == brute_force_count(n, n));
  }
}
