#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aplike/point_set.hpp"
#include "aplike/types.hpp"

namespace aplike {

  struct Generator {
    std::string letter;
    element_id  element;

    friend bool operator==(Generator const&, Generator const&) = default;
  };

  //! A word over a monoid's alphabet, as indices into generators().
  using Word = std::vector<std::size_t>;

  inline constexpr std::size_t DEFAULT_ELEMENT_CAP = 20000;

  //! Finite monoid given by its multiplication table (row = left factor), a
  //! distinguished identity and an ordered list of named generators.
  //!
  //! Values are immutable after construction and safe to share between
  //! threads.
  class Monoid {
   public:
    //! Validates ranges, the identity, associativity and generation; throws
    //! Error naming the first offending element or triple.
    static Monoid from_table(std::size_t                                 order,
                             std::vector<std::vector<element_id>> const& rows,
                             element_id                                  identity,
                             std::vector<Generator>                      generators);

    static Monoid from_flat_table(std::size_t             order,
                                  std::vector<element_id> table,
                                  element_id              identity,
                                  std::vector<Generator>  generators);

    //! Monoid generated by transformations of {0..points-1} acting on the
    //! right ((f*g)(x) = g(f(x))), elements numbered in breadth-first order
    //! from the identity map over the generators in the given order.
    static Monoid from_transformations(
        std::size_t                                                     points,
        std::vector<std::pair<std::string, std::vector<element_id>>> const& generators,
        std::size_t cap = DEFAULT_ELEMENT_CAP);

    //! No validation: for tables produced by closure computations which are
    //! associative and generated by construction.
    static Monoid trusted(std::size_t             order,
                          std::vector<element_id> table,
                          element_id              identity,
                          std::vector<Generator>  generators);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_id identity() const noexcept {
      return _identity;
    }

    [[nodiscard]] element_id multiply(element_id a, element_id b) const noexcept {
      return _table[a * _order + b];
    }

    [[nodiscard]] std::span<element_id const> table() const noexcept {
      return _table;
    }

    [[nodiscard]] std::span<element_id const> row(element_id a) const noexcept {
      return {_table.data() + a * _order, _order};
    }

    [[nodiscard]] std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] std::optional<std::size_t> letter_index(std::string_view letter) const;

    //! Splits on whitespace when present, otherwise reads one character per
    //! letter. Throws UnknownLetter.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    //! [w]_M; throws OutOfRange for a letter index past the alphabet.
    [[nodiscard]] element_id evaluate(Word const& word) const;

    //! The unique idempotent power of a.
    [[nodiscard]] element_id omega(element_id a) const noexcept;

    [[nodiscard]] bool is_idempotent(element_id a) const noexcept {
      return multiply(a, a) == a;
    }

    [[nodiscard]] PointSet idempotents() const;

    //! Setwise product {xy : x in lhs, y in rhs}.
    [[nodiscard]] PointSet multiply(PointSet const& lhs, PointSet const& rhs) const;

    [[nodiscard]] PointSet empty_set() const {
      return PointSet(_order);
    }

    [[nodiscard]] PointSet all() const {
      return PointSet::full(_order);
    }

    [[nodiscard]] PointSet singleton(element_id a) const {
      return PointSet::singleton(_order, a);
    }

    //! Cheap in-process identity of the table, used to reject mixing
    //! elements of different monoids.
    [[nodiscard]] std::size_t fingerprint() const noexcept {
      return _fingerprint;
    }

    friend bool operator==(Monoid const& lhs, Monoid const& rhs) {
      return lhs._order == rhs._order && lhs._identity == rhs._identity
             && lhs._table == rhs._table && lhs._generators == rhs._generators;
    }

   private:
    Monoid(std::size_t             order,
           std::vector<element_id> table,
           element_id              identity,
           std::vector<Generator>  generators);

    std::size_t             _order    = 0;
    element_id              _identity = 0;
    std::vector<element_id> _table;
    std::vector<Generator>  _generators;
    std::size_t             _fingerprint = 0;
  };

  //! Letters "a", "b", ..., "z", "a1", ... for generated alphabets.
  std::string default_letter(std::size_t index);

  //! Greedy generating set: scan elements in id order, keep each one not yet
  //! in the submonoid generated by those kept so far.
  std::vector<Generator> greedy_generators(std::size_t                  order,
                                           std::span<element_id const> table,
                                           element_id                   identity);

}  // namespace aplike
