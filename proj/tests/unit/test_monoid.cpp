#include "doctest.h"

#include "aplike/error.hpp"
#include "aplike/monoid.hpp"
#include "corpus.hpp"

using namespace aplike;

namespace {

  ErrorCode code_of(auto&& body) {
    try {
      body();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInput;
  }

}  // namespace

TEST_CASE("tables") {
  auto const U1 = Monoid::from_table(2, {{0, 1}, {1, 1}}, 0, {{"x", 1}});
  CHECK(U1.order() == 2);
  CHECK(U1.multiply(1, 1) == 1);
  CHECK(U1.is_idempotent(1));

  auto const Z2 = Monoid::from_table(2, {{0, 1}, {1, 0}}, 0, {{"x", 1}});
  CHECK(Z2.multiply(1, 1) == 0);
  CHECK(Z2.omega(1) == 0);
  CHECK(U1.omega(1) == 1);
}

TEST_CASE("table validation") {
  CHECK(code_of([] { Monoid::from_table(3, {{0, 1, 2}, {1, 1, 2}, {2, 1, 1}}, 0, {{"a", 1}, {"b", 2}}); })
        == ErrorCode::NonAssociative);
  CHECK(code_of([] { Monoid::from_table(2, {{0, 1}, {1, 1}}, 1, {{"x", 0}}); })
        == ErrorCode::BadIdentity);
  CHECK(code_of([] { Monoid::from_table(2, {{0, 1}, {1, 1}}, 0, {}); })
        == ErrorCode::GeneratorsDoNotGenerate);
  CHECK(code_of([] { Monoid::from_table(2, {{0, 2}, {1, 1}}, 0, {{"x", 1}}); })
        == ErrorCode::OutOfRange);
  CHECK(code_of([] { Monoid::from_table(2, {{0, 1}}, 0, {{"x", 1}}); })
        == ErrorCode::InvalidInput);
  CHECK(code_of([] { Monoid::from_table(2, {{0, 1}, {1, 1}}, 0, {{"x", 5}}); })
        == ErrorCode::OutOfRange);

  try {
    Monoid::from_table(3, {{0, 1, 2}, {1, 1, 2}, {2, 1, 1}}, 0, {{"a", 1}, {"b", 2}});
  } catch (Error const& e) {
    // The message names the triple.
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("transformations") {
  auto const RZ1 = Monoid::from_transformations(2, {{"a", {0, 0}}, {"b", {1, 1}}});
  CHECK(RZ1.order() == 3);
  CHECK(RZ1.identity() == 0);
  CHECK(RZ1.multiply(1, 2) == 2);
  CHECK(RZ1.multiply(2, 1) == 1);

  auto const T = Monoid::from_transformations(1, {{"x", {0}}});
  CHECK(T.order() == 1);

  auto const Z2 = Monoid::from_transformations(2, {{"x", {1, 0}}});
  CHECK(Z2.order() == 2);
  CHECK(Z2.multiply(1, 1) == 0);

  CHECK(code_of([] { Monoid::from_transformations(2, {{"x", {0, 2}}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { Monoid::from_transformations(2, {{"x", {0}}}); }) == ErrorCode::OutOfRange);

  // Full transformation monoid on 3 points.
  auto const T3 = Monoid::from_transformations(
      3, {{"a", {1, 0, 2}}, {"b", {1, 2, 0}}, {"c", {0, 0, 2}}});
  CHECK(T3.order() == 27);
  CHECK(code_of([] {
          Monoid::from_transformations(3, {{"a", {1, 0, 2}}, {"b", {1, 2, 0}}, {"c", {0, 0, 2}}}, 10);
        })
        == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("transformation composition acts on the right") {
  // a then b: x -> b(a(x)).
  auto const M = Monoid::from_transformations(3, {{"a", {1, 1, 2}}, {"b", {2, 0, 0}}});
  auto const ab = M.evaluate(M.parse_word("ab"));
  auto const ba = M.evaluate(M.parse_word("ba"));
  CHECK(ab != ba);
  // Word evaluation agrees with products of generators.
  CHECK(ab == M.multiply(M.generators()[0].element, M.generators()[1].element));
}

TEST_CASE("words") {
  auto const M = testing::lz1();
  CHECK(M.parse_word("ab") == Word{0, 1});
  CHECK(M.parse_word("a b a") == Word{0, 1, 0});
  CHECK(M.parse_word("a,b") == Word{0, 1});
  CHECK(M.parse_word("") == Word{});
  CHECK(M.evaluate(M.parse_word("ab")) == 1);
  CHECK(M.evaluate(M.parse_word("ba")) == 2);
  CHECK(M.evaluate({}) == M.identity());
  CHECK(code_of([&] { (void) M.parse_word("abc"); }) == ErrorCode::UnknownLetter);
  CHECK(code_of([&] { (void) M.evaluate({5}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("omega on the corpus") {
  for (auto const& [name, M] : testing::corpus()) {
    CAPTURE(name);
    for (element_id a = 0; a < M.order(); ++a) {
      auto const e = M.omega(a);
      CHECK(M.is_idempotent(e));
      // e is a power of a.
      auto p     = a;
      bool found = p == e;
      for (std::size_t k = 0; k < M.order() && !found; ++k) {
        p     = M.multiply(p, a);
        found = p == e;
      }
      CHECK(found);
      if (M.is_idempotent(a)) {
        CHECK(e == a);
      }
    }
  }
}

TEST_CASE("setwise products") {
  auto const Z3 = testing::cyclic(3);
  auto const A  = PointSet(3, {0, 1});
  CHECK(Z3.multiply(A, A) == PointSet(3, {0, 1, 2}));
  CHECK(Z3.multiply(A, Z3.empty_set()).empty());
  for (auto const& [name, M] : testing::small_corpus()) {
    auto const subsets = testing::all_subsets(M.order());
    for (auto const& X : subsets) {
      for (auto const& Y : subsets) {
        PointSet expected(M.order());
        X.for_each([&](element_id x) {
          Y.for_each([&](element_id y) { expected.insert(M.multiply(x, y)); });
        });
        REQUIRE(M.multiply(X, Y) == expected);
      }
    }
  }
}

TEST_CASE("point sets") {
  PointSet Z(130, {0, 64, 129});
  CHECK(Z.size() == 3);
  CHECK(Z.contains(129));
  CHECK(Z.elements() == std::vector<element_id>{0, 64, 129});
  CHECK(Z.first() == 0);
  Z.erase(0);
  CHECK(Z.first() == 64);
  CHECK(PointSet(130, {64}).is_subset_of(Z));
  CHECK_FALSE(Z.is_subset_of(PointSet(130, {64})));
  CHECK(canonical_less(PointSet(3, {2}), PointSet(3, {0, 1})));
  CHECK(canonical_less(PointSet(3, {0, 2}), PointSet(3, {1, 2})));
  auto const maximal =
      maximal_elements({PointSet(3, {0}), PointSet(3, {0, 1}), PointSet(3, {2}), PointSet(3, {0, 1})});
  CHECK(maximal == std::vector<PointSet>{PointSet(3, {2}), PointSet(3, {0, 1})});
}

TEST_CASE("greedy generators") {
  for (auto const& [name, M] : testing::small_corpus()) {
    auto const gens = greedy_generators(M.order(), M.table(), M.identity());
    std::vector<element_id> ids;
    for (auto const& g : gens) {
      ids.push_back(g.element);
    }
    // Rebuilding with them succeeds, so they generate.
    auto const rebuilt =
        Monoid::from_flat_table(M.order(), {M.table().begin(), M.table().end()}, M.identity(), gens);
    CHECK(rebuilt.order() == M.order());
  }
}
