#include "aplike/point_set.hpp"

#include <algorithm>

#include "aplike/kernels/kernels.hpp"

namespace aplike {

  PointSet PointSet::full(std::size_t universe) {
    PointSet result(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      result.insert(static_cast<element_id>(i));
    }
    return result;
  }

  std::size_t PointSet::size() const noexcept {
    std::size_t count = 0;
    for (auto word : _words) {
      count += static_cast<std::size_t>(std::popcount(word));
    }
    return count;
  }

  bool PointSet::empty() const noexcept {
    return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
  }

  bool PointSet::is_subset_of(PointSet const& other) const noexcept {
    return kernels::active().bits_subset(_words.data(), other._words.data(), _words.size());
  }

  bool PointSet::intersects(PointSet const& other) const noexcept {
    return kernels::active().bits_intersect(_words.data(), other._words.data(), _words.size());
  }

  PointSet& PointSet::operator|=(PointSet const& other) noexcept {
    kernels::active().bits_or(_words.data(), other._words.data(), _words.size());
    return *this;
  }

  PointSet& PointSet::operator&=(PointSet const& other) noexcept {
    kernels::active().bits_and(_words.data(), other._words.data(), _words.size());
    return *this;
  }

  std::vector<element_id> PointSet::elements() const {
    std::vector<element_id> result;
    result.reserve(size());
    for_each([&result](element_id id) { result.push_back(id); });
    return result;
  }

  element_id PointSet::first() const noexcept {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      if (_words[w] != 0) {
        return static_cast<element_id>(w * 64 + std::countr_zero(_words[w]));
      }
    }
    return 0;
  }

  std::size_t PointSet::hash() const noexcept {
    std::size_t seed = _universe;
    for (auto word : _words) {
      seed ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (seed << 6)
              + (seed >> 2);
    }
    return seed;
  }

  bool canonical_less(PointSet const& lhs, PointSet const& rhs) {
    auto const ls = lhs.size();
    auto const rs = rhs.size();
    if (ls != rs) {
      return ls < rs;
    }
    // Equal cardinality: the ascending lists differ first where the lowest
    // element of the symmetric difference sits; whichever set holds it is
    // lexicographically smaller.
    auto const lw = lhs.words();
    auto const rw = rhs.words();
    for (std::size_t w = 0; w < std::min(lw.size(), rw.size()); ++w) {
      auto diff = lw[w] ^ rw[w];
      if (diff != 0) {
        auto low = diff & (~diff + 1);
        return (lw[w] & low) != 0;
      }
    }
    return lw.size() < rw.size();
  }

  std::vector<PointSet> maximal_elements(std::vector<PointSet> sets) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<PointSet> result;
    // A set can only be dominated by a strictly larger one, i.e. one later
    // in canonical order.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j) {
        dominated = sets[j].size() > sets[i].size() && sets[i].is_subset_of(sets[j]);
      }
      if (!dominated) {
        result.push_back(sets[i]);
      }
    }
    return result;
  }

}  // namespace aplike
