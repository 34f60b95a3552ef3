#include "doctest.h"

#include "aplike/error.hpp"
#include "aplike/stable_pairs.hpp"
#include "aplike/structure.hpp"
#include "corpus.hpp"

using namespace aplike;

namespace {

  bool contains_pair(std::vector<StablePairReport> const& list, PointSet const& Y, PointSet const& N) {
    for (auto const& r : list) {
      if (r.Y == Y && r.N == N) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("M-stable pairs: examples") {
  auto const LZ1 = testing::lz1();
  auto const r   = m_stable_decide(LZ1, 1, LZ1.all());
  CHECK(r.verdict);
  CHECK(r.chain.size() == 3);
  CHECK_FALSE(certificate_error(LZ1, r).has_value());

  auto const Z2 = testing::cyclic(2);
  auto const r1 = m_stable_decide(Z2, 1, PointSet(2, {0}));
  CHECK(r1.verdict);
  // The certificate is a maximal chain, here {1}; it generates {1}.
  CHECK(r1.chain == std::vector<element_id>{0});
  CHECK_FALSE(m_stable_decide(Z2, 1, Z2.all()).verdict);
}

TEST_CASE("M-stable pairs: maximal") {
  auto const LZ1 = testing::lz1();
  auto const max = m_stable_maximal(LZ1);
  CHECK(max.size() == 3);
  CHECK(contains_pair(max, PointSet(3, {0}), PointSet(3, {0})));
  CHECK(contains_pair(max, PointSet(3, {1}), LZ1.all()));
  CHECK(contains_pair(max, PointSet(3, {2}), LZ1.all()));

  auto const Z2 = testing::cyclic(2);
  auto const mz = m_stable_maximal(Z2);
  CHECK(mz.size() == 2);
  CHECK(contains_pair(mz, PointSet(2, {0}), PointSet(2, {0})));
  CHECK(contains_pair(mz, PointSet(2, {1}), PointSet(2, {0})));

  CHECK(m_stable_maximal(testing::trivial()).size() == 1);
}

TEST_CASE("M-stable verdicts do not depend on the order used for chains") {
  for (auto const& [name, M] : testing::corpus()) {
    CAPTURE(name);
    for (element_id y = 0; y < M.order(); ++y) {
      auto const a = idempotent_chains(M, y, ChainOrder::ambient);
      auto const b = idempotent_chains(M, y, ChainOrder::stabilizer);
      std::vector<PointSet> ga, gb;
      for (auto const& c : a) {
        ga.push_back(c.second);
      }
      for (auto const& c : b) {
        gb.push_back(c.second);
      }
      CHECK(maximal_elements(ga) == maximal_elements(gb));
    }
  }
}

TEST_CASE("stabilizers inside PL") {
  auto const Z2 = henckell_closure(testing::cyclic(2));
  CHECK(stab_in_power(Z2, PointSet(2, {0, 1})).size() == 3);
  CHECK(stab_in_power(Z2, PointSet(2, {0})) == std::vector<PointSet>{PointSet(2, {0})});
  auto const U1 = henckell_closure(testing::u1());
  CHECK(stab_in_power(U1, PointSet(2, {1})).size() == 2);
  try {
    stab_in_power(U1, PointSet(2, {0, 1}));
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAMember);
  }
}

TEST_CASE("A-stable pairs: examples") {
  auto const Z2 = testing::cyclic(2);
  auto const PL = henckell_closure(Z2);
  auto const r  = a_stable_decide(PL, Z2.all(), Z2.all());
  CHECK(r.verdict);
  CHECK(r.W.size() == 3);
  CHECK(*r.Y_prime == Z2.all());
  CHECK_FALSE(certificate_error(Z2, r, &PL).has_value());
  CHECK_FALSE(certificate_error(Z2, r).has_value());

  auto const r2 = a_stable_decide(PL, PointSet(2, {1}), Z2.all());
  CHECK(r2.verdict);
  CHECK(*r2.Y_prime == Z2.all());

  auto const U1  = testing::u1();
  auto const PLU = henckell_closure(U1);
  CHECK_FALSE(a_stable_decide(PLU, PointSet(2, {0}), U1.all()).verdict);
}

TEST_CASE("A-stable pairs: maximal") {
  auto const Z2 = testing::cyclic(2);
  auto const mz = a_stable_maximal(henckell_closure(Z2));
  REQUIRE(mz.size() == 1);
  CHECK(mz[0].Y == Z2.all());
  CHECK(mz[0].N == Z2.all());

  auto const LZ1 = testing::lz1();
  auto const ml  = a_stable_maximal(henckell_closure(LZ1));
  CHECK(ml.size() == 3);
  CHECK(contains_pair(ml, PointSet(3, {0}), PointSet(3, {0})));
  CHECK(contains_pair(ml, PointSet(3, {1}), LZ1.all()));
  CHECK(contains_pair(ml, PointSet(3, {2}), LZ1.all()));

  CHECK(a_stable_maximal(henckell_closure(testing::trivial())).size() == 1);
}

TEST_CASE("A-stable pairs of RZ1") {
  // Stab({a}) = {1, a}; b does not fix a.
  auto const RZ1 = testing::rz1();
  auto const PL  = henckell_closure(RZ1);
  auto const r   = a_stable_decide(PL, PointSet(3, {1}), PointSet(3, {0, 1}));
  CHECK(r.verdict);
  CHECK_FALSE(a_stable_decide(PL, PointSet(3, {1}), RZ1.all()).verdict);
}

TEST_CASE("M-stable implies A-stable, certificates re-verify") {
  for (auto const& [name, M] : testing::small_corpus()) {
    CAPTURE(name);
    auto const PL = henckell_closure(M);
    for (auto const& r : m_stable_maximal(M)) {
      CHECK_FALSE(certificate_error(M, r).has_value());
      auto const a = a_stable_decide(PL, r.Y, r.N);
      CHECK(a.verdict);
      CHECK_FALSE(certificate_error(M, a, &PL).has_value());
    }
    for (auto const& r : a_stable_maximal(PL)) {
      CHECK_FALSE(certificate_error(M, r, &PL).has_value());
      CHECK(is_submonoid(M, r.N));
    }
  }
}

TEST_CASE("maximal A-stable pairs do not depend on the thread count") {
  for (auto const& [name, M] : testing::small_corpus()) {
    auto const PL = henckell_closure(M);
    auto const a  = a_stable_maximal(PL, {.threads = 1});
    auto const b  = a_stable_maximal(PL, {.threads = 4});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].Y == b[i].Y);
      CHECK(a[i].N == b[i].N);
      CHECK(a[i].W == b[i].W);
    }
  }
}

TEST_CASE("errors") {
  auto const Z2 = testing::cyclic(2);
  auto const PL = henckell_closure(Z2);
  CHECK_THROWS_AS(m_stable_decide(Z2, 1, PointSet(2, {1})), Error);
  CHECK_THROWS_AS(a_stable_decide(PL, PointSet(2), Z2.all()), Error);
  try {
    a_stable_decide(PL, PointSet(2), Z2.all());
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
  try {
    a_stable_decide(PL, PointSet(2, {1}), PointSet(2, {1}));
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotASubmonoid);
  }
  auto const Z4 = henckell_closure(testing::cyclic(4));
  try {
    a_stable_decide(Z4, PointSet(4, {0, 1, 2, 3}), PointSet(4, {0, 1, 2, 3}), {.submonoid_cap = 2});
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
}
