#include "aplike/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>

#include "aplike/detail/closure.hpp"
#include "aplike/error.hpp"
#include "aplike/kernels/kernels.hpp"

namespace aplike {

  namespace {

    std::string str(std::size_t v) {
      return std::to_string(v);
    }

    struct TransformationHash {
      std::size_t operator()(std::vector<element_id> const& t) const noexcept {
        std::size_t seed = t.size();
        for (auto v : t) {
          seed = seed * 1000003U ^ v;
        }
        return seed;
      }
    };

    PointSet generated_by(std::size_t                  order,
                          std::span<element_id const> table,
                          element_id                   identity,
                          std::vector<element_id> const& gens) {
      PointSet                reached(order);
      std::vector<element_id> queue{identity};
      reached.insert(identity);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gens) {
          auto next = table[queue[i] * order + g];
          if (!reached.contains(next)) {
            reached.insert(next);
            queue.push_back(next);
          }
        }
      }
      return reached;
    }

  }  // namespace

  Monoid::Monoid(std::size_t             order,
                 std::vector<element_id> table,
                 element_id              identity,
                 std::vector<Generator>  generators)
      : _order(order),
        _identity(identity),
        _table(std::move(table)),
        _generators(std::move(generators)) {
    std::string_view bytes(reinterpret_cast<char const*>(_table.data()),
                           _table.size() * sizeof(element_id));
    _fingerprint = std::hash<std::string_view>{}(bytes) ^ (_order * 0x9e3779b97f4a7c15ULL);
  }

  Monoid Monoid::trusted(std::size_t             order,
                         std::vector<element_id> table,
                         element_id              identity,
                         std::vector<Generator>  generators) {
    return Monoid(order, std::move(table), identity, std::move(generators));
  }

  Monoid Monoid::from_table(std::size_t                                 order,
                            std::vector<std::vector<element_id>> const& rows,
                            element_id                                  identity,
                            std::vector<Generator>                      generators) {
    if (rows.size() != order) {
      throw Error(ErrorCode::InvalidInput,
                  "table has " + str(rows.size()) + " rows, expected " + str(order));
    }
    std::vector<element_id> flat;
    flat.reserve(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      if (rows[a].size() != order) {
        throw Error(ErrorCode::InvalidInput,
                    "table row " + str(a) + " has " + str(rows[a].size())
                        + " entries, expected " + str(order));
      }
      flat.insert(flat.end(), rows[a].begin(), rows[a].end());
    }
    return from_flat_table(order, std::move(flat), identity, std::move(generators));
  }

  Monoid Monoid::from_flat_table(std::size_t             order,
                                 std::vector<element_id> table,
                                 element_id              identity,
                                 std::vector<Generator>  generators) {
    if (order == 0) {
      throw Error(ErrorCode::InvalidInput, "order must be positive");
    }
    if (table.size() != order * order) {
      throw Error(ErrorCode::InvalidInput, "table must have order^2 entries");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= order) {
        throw Error(ErrorCode::OutOfRange,
                    "table[" + str(i / order) + "][" + str(i % order) + "] = "
                        + str(table[i]) + " is not an element id");
      }
    }
    if (identity >= order) {
      throw Error(ErrorCode::OutOfRange, "identity " + str(identity) + " is not an element id");
    }
    for (auto const& g : generators) {
      if (g.element >= order) {
        throw Error(ErrorCode::OutOfRange,
                    "generator '" + g.letter + "' maps to " + str(g.element)
                        + " which is not an element id");
      }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (generators[i].letter == generators[j].letter) {
          throw Error(ErrorCode::InvalidInput,
                      "generator letter '" + generators[i].letter + "' is declared twice");
        }
      }
    }
    for (std::size_t a = 0; a < order; ++a) {
      if (table[identity * order + a] != a || table[a * order + identity] != a) {
        throw Error(ErrorCode::BadIdentity,
                    "identity " + str(identity) + " does not fix element " + str(a));
      }
    }
    auto violation = kernels::active().associativity_violation(table.data(), order);
    if (violation != npos) {
      auto a = violation / (order * order);
      auto b = (violation / order) % order;
      auto c = violation % order;
      throw Error(ErrorCode::NonAssociative,
                  "(" + str(a) + "*" + str(b) + ")*" + str(c) + " != " + str(a) + "*(" + str(b)
                      + "*" + str(c) + ")");
    }
    std::vector<element_id> gens;
    for (auto const& g : generators) {
      gens.push_back(g.element);
    }
    auto reached = generated_by(order, table, identity, gens);
    if (reached.size() != order) {
      element_id missing = 0;
      while (reached.contains(missing)) {
        ++missing;
      }
      throw Error(ErrorCode::GeneratorsDoNotGenerate,
                  "element " + str(missing) + " is not a product of generators");
    }
    return Monoid(order, std::move(table), identity, std::move(generators));
  }

  Monoid Monoid::from_transformations(
      std::size_t                                                         points,
      std::vector<std::pair<std::string, std::vector<element_id>>> const& generators,
      std::size_t                                                         cap) {
    if (points == 0) {
      throw Error(ErrorCode::InvalidInput, "transformation monoid needs at least one point");
    }
    for (auto const& [letter, map] : generators) {
      if (map.size() != points) {
        throw Error(ErrorCode::OutOfRange,
                    "generator '" + letter + "' has " + str(map.size()) + " images, expected "
                        + str(points));
      }
      for (std::size_t x = 0; x < points; ++x) {
        if (map[x] >= points) {
          throw Error(ErrorCode::OutOfRange,
                      "generator '" + letter + "' maps point " + str(x) + " to " + str(map[x]));
        }
      }
    }
    std::vector<element_id> id(points);
    for (std::size_t x = 0; x < points; ++x) {
      id[x] = static_cast<element_id>(x);
    }
    auto closure = detail::right_closure<std::vector<element_id>, TransformationHash>(
        id,
        generators.size(),
        [&](std::vector<element_id> const& f, std::size_t letter) {
          auto const&             g = generators[letter].second;
          std::vector<element_id> fg(points);
          for (std::size_t x = 0; x < points; ++x) {
            fg[x] = g[f[x]];
          }
          return fg;
        },
        cap,
        "transformation monoid");
    std::vector<Generator> gens;
    for (std::size_t x = 0; x < generators.size(); ++x) {
      gens.push_back({generators[x].first, closure.right[x]});
    }
    auto table = detail::table_from_closure(closure);
    return Monoid(closure.elements.size(), std::move(table), 0, std::move(gens));
  }

  std::optional<std::size_t> Monoid::letter_index(std::string_view letter) const {
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      if (_generators[i].letter == letter) {
        return i;
      }
    }
    return std::nullopt;
  }

  Word Monoid::parse_word(std::string_view text) const {
    Word word;
    auto push = [&](std::string_view letter) {
      auto index = letter_index(letter);
      if (!index) {
        throw Error(ErrorCode::UnknownLetter, "'" + std::string(letter) + "' is not a generator");
      }
      word.push_back(*index);
    };
    bool const spaced = text.find_first_of(" \t,") != std::string_view::npos;
    if (!spaced) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        push(text.substr(i, 1));
      }
      return word;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
        ++pos;
      }
      auto end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') {
        ++end;
      }
      if (end > pos) {
        push(text.substr(pos, end - pos));
      }
      pos = end;
    }
    return word;
  }

  element_id Monoid::evaluate(Word const& word) const {
    element_id value = _identity;
    for (auto letter : word) {
      if (letter >= _generators.size()) {
        throw Error(ErrorCode::OutOfRange, "letter index " + str(letter) + " past the alphabet");
      }
      value = multiply(value, _generators[letter].element);
    }
    return value;
  }

  element_id Monoid::omega(element_id a) const noexcept {
    // a^k for k = order is past the index, so the cycle contains the
    // idempotent; walk the cycle to find it.
    element_id power = a;
    for (std::size_t i = 1; i < _order; ++i) {
      power = multiply(power, a);
    }
    while (!is_idempotent(power)) {
      power = multiply(power, a);
    }
    return power;
  }

  PointSet Monoid::idempotents() const {
    PointSet result(_order);
    for (element_id a = 0; a < _order; ++a) {
      if (is_idempotent(a)) {
        result.insert(a);
      }
    }
    return result;
  }

  PointSet Monoid::multiply(PointSet const& lhs, PointSet const& rhs) const {
    PointSet result(_order);
    auto     right = rhs.elements();
    std::vector<element_id> buffer(right.size());
    auto const&             k = kernels::active();
    lhs.for_each([&](element_id a) {
      k.multiply_left(_table.data(), _order, a, right.data(), right.size(), buffer.data());
      for (auto v : buffer) {
        result.insert(v);
      }
    });
    return result;
  }

  std::string default_letter(std::size_t index) {
    std::string letter(1, static_cast<char>('a' + index % 26));
    if (index >= 26) {
      letter += std::to_string(index / 26);
    }
    return letter;
  }

  std::vector<Generator> greedy_generators(std::size_t                  order,
                                           std::span<element_id const> table,
                                           element_id                   identity) {
    std::vector<element_id> gens;
    PointSet                reached = generated_by(order, table, identity, gens);
    for (element_id a = 0; a < order; ++a) {
      if (!reached.contains(a)) {
        gens.push_back(a);
        reached = generated_by(order, table, identity, gens);
      }
    }
    std::vector<Generator> result;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      result.push_back({default_letter(i), gens[i]});
    }
    return result;
  }

}  // namespace aplike
