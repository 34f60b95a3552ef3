#include "doctest.h"

#include "aplike/cliques.hpp"
#include "aplike/congruence.hpp"
#include "aplike/error.hpp"
#include "aplike/structure.hpp"
#include "corpus.hpp"

using namespace aplike;
using testing::cyclic;
using testing::lz1;
using testing::rz1;
using testing::trivial;
using testing::u1;

TEST_CASE("stabilizers") {
  CHECK(stabilizer(lz1(), 1) == PointSet(3, {0, 1, 2}));
  CHECK(stabilizer(cyclic(2), 1) == PointSet(2, {0}));
  for (auto const& [name, M] : testing::corpus()) {
    CAPTURE(name);
    CHECK(stabilizer(M, M.identity()) == M.singleton(M.identity()));
    for (element_id m = 0; m < M.order(); ++m) {
      CHECK(is_submonoid(M, stabilizer(M, m)));
    }
  }
}

TEST_CASE("Green's relations") {
  auto const gz = green(cyclic(2));
  CHECK(gz.L_classes == std::vector<PointSet>{PointSet(2, {0, 1})});

  auto const g = green(lz1());
  CHECK(g.L_classes == std::vector<PointSet>{PointSet(3, {0}), PointSet(3, {1, 2})});
  CHECK(g.R_classes
        == std::vector<PointSet>{PointSet(3, {0}), PointSet(3, {1}), PointSet(3, {2})});

  for (auto const& [name, M] : testing::small_corpus()) {
    CAPTURE(name);
    auto const gd = green(M);
    auto const n  = M.order();
    for (element_id a = 0; a < n; ++a) {
      CHECK(gd.L_leq(a, a));
      for (element_id b = 0; b < n; ++b) {
        bool in_Mb = false, in_bM = false, in_MbM = false;
        for (element_id m = 0; m < n; ++m) {
          in_Mb = in_Mb || M.multiply(m, b) == a;
          in_bM = in_bM || M.multiply(b, m) == a;
          for (element_id k = 0; k < n; ++k) {
            in_MbM = in_MbM || M.multiply(M.multiply(m, b), k) == a;
          }
        }
        CHECK(gd.L_leq(a, b) == in_Mb);
        CHECK(gd.R_leq(a, b) == in_bM);
        CHECK(gd.J_leq(a, b) == in_MbM);
        for (element_id c = 0; c < n; ++c) {
          if (gd.L_leq(a, b) && gd.L_leq(b, c)) {
            CHECK(gd.L_leq(a, c));
          }
        }
      }
    }
    // H = L ∧ R
    for (auto const& H : gd.H_classes) {
      auto const a = H.first();
      H.for_each([&](element_id b) {
        CHECK((gd.L_leq(a, b) && gd.L_leq(b, a) && gd.R_leq(a, b) && gd.R_leq(b, a)));
      });
    }
  }
}

TEST_CASE("aperiodicity") {
  CHECK_FALSE(is_aperiodic(cyclic(2)));
  CHECK(is_aperiodic(u1()));
  CHECK(is_aperiodic(lz1()));
  for (auto const& [name, M] : testing::corpus()) {
    // Aperiodic iff H-trivial.
    auto const g       = green(M);
    bool       trivial = true;
    for (auto const& H : g.H_classes) {
      trivial = trivial && H.size() == 1;
    }
    CHECK(is_aperiodic(M) == trivial);
  }
}

TEST_CASE("submonoids") {
  CHECK(submonoid(cyclic(2), PointSet(2, {1})) == PointSet(2, {0, 1}));
  CHECK(submonoid(lz1(), PointSet(3, {1, 2})) == PointSet(3, {0, 1, 2}));
  CHECK(submonoid(lz1(), PointSet(3)) == PointSet(3, {0}));
}

TEST_CASE("L-chains of idempotents") {
  CHECK(is_L_chain_of_idempotents(lz1(), PointSet(3, {1, 2})));
  CHECK_FALSE(is_L_chain_of_idempotents(cyclic(2), PointSet(2, {0, 1})));
  CHECK_FALSE(is_L_chain_of_idempotents(rz1(), PointSet(3, {1, 2})));
  CHECK(is_L_chain_of_idempotents(rz1(), PointSet(3)));
}

TEST_CASE("internal L-chains") {
  CHECK(is_internal_L_chain(lz1(), lz1().all()));
  CHECK_FALSE(is_internal_L_chain(rz1(), rz1().all()));
  CHECK(is_internal_L_chain(cyclic(3), cyclic(3).all()));
  CHECK_THROWS_AS(is_internal_L_chain(lz1(), PointSet(3, {1})), Error);
}

TEST_CASE("R-trivial bands") {
  CHECK(is_R_trivial_band(lz1(), lz1().all()));
  CHECK_FALSE(is_R_trivial_band(rz1(), rz1().all()));
  CHECK(is_R_trivial_band(trivial(), trivial().all()));
  CHECK_FALSE(is_R_trivial_band(cyclic(2), cyclic(2).all()));
}

TEST_CASE("L-chains of idempotents generate R-trivial bands") {
  for (auto const& [name, M] : testing::corpus()) {
    CAPTURE(name);
    auto const ids = M.idempotents().elements();
    REQUIRE(ids.size() < 16);
    for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
      PointSet Y(M.order());
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if ((mask >> i) & 1U) {
          Y.insert(ids[i]);
        }
      }
      if (is_L_chain_of_idempotents(M, Y)) {
        CHECK(is_R_trivial_band(M, submonoid(M, Y)));
      }
    }
  }
}

TEST_CASE("minimal ideal") {
  CHECK(minimal_ideal(u1()) == PointSet(2, {1}));
  CHECK(minimal_ideal(cyclic(3)) == cyclic(3).all());
  CHECK(minimal_ideal(lz1()) == PointSet(3, {1, 2}));
  for (auto const& [name, M] : testing::corpus()) {
    auto const I = minimal_ideal(M);
    CHECK_FALSE(I.empty());
    // Two-sided ideal contained in every principal ideal.
    CHECK(M.multiply(M.all(), M.multiply(I, M.all())) == I);
    for (element_id a = 0; a < M.order(); ++a) {
      CHECK(I.is_subset_of(M.multiply(M.all(), M.multiply(M.singleton(a), M.all()))));
    }
  }
}

TEST_CASE("ER and aperiodic: the minimal ideal is fixed by everything") {
  std::size_t tested = 0;
  for (auto const& [name, M] : testing::corpus()) {
    if (!is_ER(M) || !is_aperiodic(M)) {
      continue;
    }
    ++tested;
    minimal_ideal(M).for_each([&](element_id x) { CHECK(stabilizer(M, x) == M.all()); });
  }
  CHECK(tested > 10);
}

TEST_CASE("absolute Type I") {
  CHECK(is_absolute_type_I(lz1(), lz1().all()));
  CHECK(is_absolute_type_I(cyclic(2), cyclic(2).all()));
  // RZ1 is generated by {1} ∪ {a} ∪ {b} but {a} and {b} are incomparable.
  CHECK_FALSE(is_absolute_type_I(rz1(), rz1().all()));
  for (auto const& [name, M] : testing::corpus()) {
    CAPTURE(name);
    // Internal L-chains are absolute Type I.
    if (is_internal_L_chain(M, M.all())) {
      CHECK(is_absolute_type_I(M, M.all()));
    }
    // Aperiodic absolute Type I monoids are ER.
    if (is_aperiodic(M) && is_absolute_type_I(M, M.all())) {
      CHECK(is_ER(M));
    }
  }
}

TEST_CASE("absolute Type I passes to quotients") {
  std::size_t quotients = 0;
  for (auto const& [name, M] : testing::small_corpus()) {
    if (!is_absolute_type_I(M, M.all())) {
      continue;
    }
    for (element_id a = 0; a < M.order(); ++a) {
      for (element_id b = a + 1; b < M.order(); ++b) {
        auto const q = quotient(M, congruence_generated_by(M, {{a, b}}));
        ++quotients;
        CAPTURE(name);
        CHECK(is_absolute_type_I(q.monoid, q.monoid.all()));
      }
    }
  }
  CHECK(quotients > 20);
}

TEST_CASE("internal order inside submonoids") {
  // {1, a} in LZ1: a is below 1 in the submonoid.
  auto const M     = lz1();
  auto const order = internal_order(M, PointSet(3, {0, 1}), true);
  REQUIRE(order.size() == 2);
  CHECK(order[1].contains(0));
  CHECK_FALSE(order[0].contains(1));
}

TEST_CASE("restriction") {
  auto const M = lz1();
  auto const r = restrict_to(M, PointSet(3, {0, 2}));
  CHECK(r.monoid.order() == 2);
  CHECK(r.embedding == std::vector<element_id>{0, 2});
  CHECK(is_aperiodic(r.monoid));
}

TEST_CASE("maximal cliques") {
  // Path 0 - 1 - 2 and an isolated vertex 3.
  std::vector<PointSet> adj{PointSet(4, {1}), PointSet(4, {0, 2}), PointSet(4, {1}), PointSet(4)};
  auto const cliques = maximal_cliques(adj);
  CHECK(cliques
        == std::vector<PointSet>{PointSet(4, {3}), PointSet(4, {0, 1}), PointSet(4, {1, 2})});
  CHECK(maximal_cliques({}).empty());
}

TEST_CASE("eggbox DOT") {
  auto const M   = lz1();
  auto const dot = eggbox_dot(M, green(M));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("*") != std::string::npos);
}
