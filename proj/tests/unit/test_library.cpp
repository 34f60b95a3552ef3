#include "doctest.h"

#include "aplike/error.hpp"
#include "aplike/library.hpp"
#include "aplike/structure.hpp"

using namespace aplike;

TEST_CASE("counts match the brute-force oracle") {
  // Frozen from tests/oracles/brute_force.py.
  std::size_t const all[]       = {1, 2, 7, 35};
  std::size_t const aperiodic[] = {1, 1, 4, 19};
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(enumerate_monoids(n, false).size() == all[n - 1]);
    CHECK(enumerate_monoids(n, true).size() == aperiodic[n - 1]);
  }
}

TEST_CASE("exhaustive libraries") {
  CHECK(aperiodic_library(1, false).size() == 1);
  CHECK(aperiodic_library(1, false)[0].monoid.order() == 1);
  auto const two = aperiodic_library(2, false);
  REQUIRE(two.size() == 2);
  CHECK(two[1].monoid.order() == 2);
  CHECK(aperiodic_library(4, false).size() == 25);
  CHECK(full_library(3).size() == 10);
}

TEST_CASE("enumerated monoids are pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const list = enumerate_monoids(n, false);
    for (auto const& M : list) {
      CHECK(M.identity() == 0);
      CHECK(M.order() == n);
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        CHECK_FALSE(std::equal(list[i].table().begin(), list[i].table().end(),
                               list[j].table().begin()));
      }
    }
  }
}

TEST_CASE("curated families") {
  auto const curated = curated_aperiodic();
  CHECK(curated.size() == 6);
  for (auto const& entry : curated) {
    CAPTURE(entry.name);
    CHECK(is_aperiodic(entry.monoid));
    CHECK(entry.monoid.order() > 4);
  }
  CHECK(chain_semilattice(5).order() == 5);
  CHECK(brandt_monoid().order() == 6);
  CHECK(a2_monoid().order() == 6);
  auto const L = left_zero_monoid(2);
  CHECK(L.multiply(1, 2) == 1);
  auto const R = right_zero_monoid(2);
  CHECK(R.multiply(1, 2) == 2);
}

TEST_CASE("order limit") {
  try {
    enumerate_monoids(5, true);
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}
