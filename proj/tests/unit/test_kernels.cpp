#include <random>
#include <vector>

#include "doctest.h"

#include "aplike/kernels/kernels.hpp"
#include "aplike/monoid.hpp"
#include "aplike/point_set.hpp"
#include "corpus.hpp"

using namespace aplike;
using aplike::kernels::KernelTable;

namespace {

  std::vector<element_id> random_table(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<element_id> pick(0, static_cast<element_id>(n - 1));
    std::vector<element_id>                   t(n * n);
    for (auto& x : t) {
      x = pick(rng);
    }
    return t;
  }

  std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t count, int density) {
    std::vector<std::uint64_t> w(count);
    for (auto& x : w) {
      x = rng();
      for (int i = 0; i < density; ++i) {
        x &= rng();
      }
    }
    return w;
  }

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
  auto const* avx = kernels::avx2_kernels();
  if (avx == nullptr || !kernels::cpu_supports(kernels::Isa::avx2)) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU; nothing to compare");
    return;
  }
  KernelTable const& ref = kernels::scalar_kernels();
  std::mt19937       rng(7);

  SUBCASE("associativity on corpus tables") {
    for (auto const& [name, M] : testing::corpus()) {
      auto const t = M.table();
      CHECK(ref.associativity_violation(t.data(), M.order()) == npos);
      CHECK(avx->associativity_violation(t.data(), M.order()) == npos);
    }
  }

  SUBCASE("associativity on random tables") {
    for (std::size_t n : {1, 2, 3, 5, 8, 9, 17, 33}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto const t = random_table(rng, n);
        CHECK(ref.associativity_violation(t.data(), n)
              == avx->associativity_violation(t.data(), n));
      }
    }
  }

  SUBCASE("associativity on large associative tables") {
    for (std::size_t n : {10, 31, 64}) {
      std::vector<element_id> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<element_id>((a + b) % n);
        }
      }
      CHECK(ref.associativity_violation(t.data(), n) == npos);
      CHECK(avx->associativity_violation(t.data(), n) == npos);
      t[n * n - 1] = 0;
      CHECK(ref.associativity_violation(t.data(), n) == avx->associativity_violation(t.data(), n));
    }
  }

  SUBCASE("gather multiplications") {
    for (std::size_t n : {1, 3, 7, 8, 15, 40}) {
      auto const t = random_table(rng, n);
      for (std::size_t count : {0, 1, 7, 8, 9, 23, 64}) {
        std::uniform_int_distribution<element_id> pick(0, static_cast<element_id>(n - 1));
        std::vector<element_id>                   ids(count);
        for (auto& x : ids) {
          x = pick(rng);
        }
        auto const              other = pick(rng);
        std::vector<element_id> a(count), b(count);
        ref.multiply_right(t.data(), n, ids.data(), count, other, a.data());
        avx->multiply_right(t.data(), n, ids.data(), count, other, b.data());
        CHECK(a == b);
        ref.multiply_left(t.data(), n, other, ids.data(), count, a.data());
        avx->multiply_left(t.data(), n, other, ids.data(), count, b.data());
        CHECK(a == b);
      }
    }
  }

  SUBCASE("bitset operations") {
    std::mt19937_64 wrng(11);
    for (std::size_t words : {0, 1, 3, 4, 5, 8, 13}) {
      for (int density = 0; density < 4; ++density) {
        auto const x = random_words(wrng, words, density);
        auto       y = random_words(wrng, words, density);
        CHECK(ref.bits_subset(x.data(), y.data(), words)
              == avx->bits_subset(x.data(), y.data(), words));
        CHECK(ref.bits_intersect(x.data(), y.data(), words)
              == avx->bits_intersect(x.data(), y.data(), words));
        auto u1 = x, u2 = x;
        ref.bits_or(u1.data(), y.data(), words);
        avx->bits_or(u2.data(), y.data(), words);
        CHECK(u1 == u2);
        CHECK(ref.bits_subset(x.data(), u1.data(), words));
        CHECK(avx->bits_subset(y.data(), u2.data(), words));
        auto i1 = x, i2 = x;
        ref.bits_and(i1.data(), y.data(), words);
        avx->bits_and(i2.data(), y.data(), words);
        CHECK(i1 == i2);
      }
    }
  }
}

TEST_CASE("kernel selection") {
  auto const initial = kernels::active_isa();
  CHECK(kernels::select(kernels::Isa::scalar));
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  auto const M = testing::cyclic(5);
  CHECK(M.multiply(M.all(), M.singleton(1)) == M.all());
  if (kernels::avx2_kernels() != nullptr && kernels::cpu_supports(kernels::Isa::avx2)) {
    CHECK(kernels::select(kernels::Isa::avx2));
    CHECK(kernels::active_isa() == kernels::Isa::avx2);
  } else {
    CHECK_FALSE(kernels::select(kernels::Isa::avx2));
  }
  kernels::select(initial);
}
