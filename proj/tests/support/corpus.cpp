#include "corpus.hpp"

#include "aplike/library.hpp"

namespace aplike::testing {

  Monoid trivial() {
    return Monoid::from_table(1, {{0}}, 0, {{"x", 0}});
  }

  Monoid u1() {
    return Monoid::from_table(2, {{0, 1}, {1, 1}}, 0, {{"x", 1}});
  }

  Monoid cyclic(std::size_t n) {
    std::vector<std::vector<element_id>> rows(n, std::vector<element_id>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rows[a][b] = static_cast<element_id>((a + b) % n);
      }
    }
    return Monoid::from_table(n, rows, 0, {{"g", n == 1 ? 0U : 1U}});
  }

  Monoid lz1() {
    return Monoid::from_table(3, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0, {{"a", 1}, {"b", 2}});
  }

  Monoid rz1() {
    return Monoid::from_transformations(2, {{"a", {0, 0}}, {"b", {1, 1}}});
  }

  std::vector<NamedMonoid> const& small_corpus() {
    static auto const result = [] {
      std::vector<NamedMonoid> list;
      for (std::size_t n = 1; n <= MAX_EXHAUSTIVE_ORDER; ++n) {
        std::size_t k = 0;
        for (auto& M : enumerate_monoids(n, false)) {
          list.push_back({"M" + std::to_string(n) + "." + std::to_string(k++), std::move(M)});
        }
      }
      return list;
    }();
    return result;
  }

  std::vector<NamedMonoid> const& corpus() {
    static auto const result = [] {
      auto list = small_corpus();
      for (auto& entry : curated_aperiodic()) {
        list.push_back({entry.name, std::move(entry.monoid)});
      }
      return list;
    }();
    return result;
  }

  std::string data_path(std::string const& file) {
    return std::string(APLIKE_TEST_DATA) + "/" + file;
  }

  std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length) {
    std::vector<Word> result{{}};
    for (std::size_t start = 0; start < result.size(); ++start) {
      if (result[start].size() == max_length) {
        continue;
      }
      for (std::size_t x = 0; x < letters; ++x) {
        auto w = result[start];
        w.push_back(x);
        result.push_back(std::move(w));
      }
    }
    return result;
  }

  std::vector<PointSet> all_subsets(std::size_t n) {
    std::vector<PointSet> result;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      PointSet Z(n);
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
          Z.insert(static_cast<element_id>(i));
        }
      }
      result.push_back(std::move(Z));
    }
    return result;
  }

}  // namespace aplike::testing
