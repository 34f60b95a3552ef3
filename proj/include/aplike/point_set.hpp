#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "aplike/types.hpp"

namespace aplike {

  //! A subset of the elements {0, ..., universe-1} of a finite monoid, stored
  //! as a bitset. Every pointlike, stabilizer and submonoid in the library is
  //! one of these.
  class PointSet {
   public:
    PointSet() = default;

    explicit PointSet(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}

    PointSet(std::size_t universe, std::initializer_list<element_id> ids)
        : PointSet(universe) {
      for (auto id : ids) {
        insert(id);
      }
    }

    template <typename Range>
    static PointSet of(std::size_t universe, Range const& ids) {
      PointSet result(universe);
      for (auto id : ids) {
        result.insert(static_cast<element_id>(id));
      }
      return result;
    }

    static PointSet full(std::size_t universe);

    static PointSet singleton(std::size_t universe, element_id id) {
      PointSet result(universe);
      result.insert(id);
      return result;
    }

    [[nodiscard]] std::size_t universe() const noexcept {
      return _universe;
    }

    [[nodiscard]] bool contains(element_id id) const noexcept {
      return id < _universe && ((_words[id >> 6] >> (id & 63)) & 1U) != 0;
    }

    void insert(element_id id) noexcept {
      _words[id >> 6] |= std::uint64_t{1} << (id & 63);
    }

    void erase(element_id id) noexcept {
      _words[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }

    [[nodiscard]] std::size_t size() const noexcept;

    [[nodiscard]] bool empty() const noexcept;

    [[nodiscard]] bool is_subset_of(PointSet const& other) const noexcept;

    [[nodiscard]] bool intersects(PointSet const& other) const noexcept;

    PointSet& operator|=(PointSet const& other) noexcept;
    PointSet& operator&=(PointSet const& other) noexcept;

    friend PointSet operator|(PointSet lhs, PointSet const& rhs) noexcept {
      return lhs |= rhs;
    }

    friend PointSet operator&(PointSet lhs, PointSet const& rhs) noexcept {
      return lhs &= rhs;
    }

    //! Elements in ascending order.
    [[nodiscard]] std::vector<element_id> elements() const;

    //! Smallest member; undefined on the empty set.
    [[nodiscard]] element_id first() const noexcept;

    template <typename Func>
    void for_each(Func&& func) const {
      for (std::size_t w = 0; w < _words.size(); ++w) {
        std::uint64_t bits = _words[w];
        while (bits != 0) {
          auto bit = static_cast<std::size_t>(std::countr_zero(bits));
          func(static_cast<element_id>(w * 64 + bit));
          bits &= bits - 1;
        }
      }
    }

    [[nodiscard]] std::span<std::uint64_t const> words() const noexcept {
      return _words;
    }

    [[nodiscard]] std::size_t hash() const noexcept;

    friend bool operator==(PointSet const&, PointSet const&) = default;

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  //! Canonical order on point sets: by cardinality, then lexicographically
  //! on the ascending element lists.
  bool canonical_less(PointSet const& lhs, PointSet const& rhs);

  struct CanonicalLess {
    bool operator()(PointSet const& lhs, PointSet const& rhs) const {
      return canonical_less(lhs, rhs);
    }
  };

  struct PointSetHash {
    std::size_t operator()(PointSet const& set) const noexcept {
      return set.hash();
    }
  };

  //! The subset-maximal members of `sets`, in canonical order, without
  //! duplicates.
  std::vector<PointSet> maximal_elements(std::vector<PointSet> sets);

}  // namespace aplike
