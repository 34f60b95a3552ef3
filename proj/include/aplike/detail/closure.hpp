#pragma once

// Breadth-first enumeration of the monoid generated by a finite alphabet,
// recording the right Cayley graph and a spanning tree so that the full
// multiplication table can be recovered in O(n^2) without multiplying
// arbitrary pairs of elements.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aplike/error.hpp"
#include "aplike/types.hpp"

namespace aplike::detail {

  template <typename Element>
  struct RightClosure {
    std::vector<Element>    elements;     // BFS order, elements[0] is the identity
    std::vector<element_id> parent;       // elements[i] = elements[parent[i]] * letter[i]
    std::vector<std::size_t> letter;
    std::vector<element_id> right;        // right[i * letters + x] = elements[i] * x
    std::size_t             letters = 0;
  };

  //! `multiply(e, x)` returns e times the x-th generator.
  template <typename Element, typename Hash, typename Multiply>
  RightClosure<Element> right_closure(Element          identity,
                                      std::size_t      letters,
                                      Multiply&&       multiply,
                                      std::size_t      cap,
                                      std::string const& what) {
    RightClosure<Element> result;
    result.letters = letters;
    std::unordered_map<Element, element_id, Hash> index;
    index.emplace(identity, 0);
    result.elements.push_back(std::move(identity));
    result.parent.push_back(0);
    result.letter.push_back(0);
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      for (std::size_t x = 0; x < letters; ++x) {
        Element next = multiply(result.elements[i], x);
        auto    it   = index.find(next);
        if (it == index.end()) {
          if (result.elements.size() >= cap) {
            throw Error(ErrorCode::SizeLimitExceeded,
                        what + " exceeds the element cap of " + std::to_string(cap));
          }
          auto id = static_cast<element_id>(result.elements.size());
          it      = index.emplace(next, id).first;
          result.elements.push_back(std::move(next));
          result.parent.push_back(static_cast<element_id>(i));
          result.letter.push_back(x);
        }
        result.right.push_back(it->second);
      }
    }
    return result;
  }

  //! Full table from the right Cayley graph: a * b is obtained by reading
  //! the spanning-tree word of b from a.
  template <typename Element>
  std::vector<element_id> table_from_closure(RightClosure<Element> const& closure) {
    std::size_t const       n = closure.elements.size();
    std::size_t const       k = closure.letters;
    std::vector<element_id> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      element_id* row = table.data() + a * n;
      row[0]          = static_cast<element_id>(a);
      for (std::size_t b = 1; b < n; ++b) {
        row[b] = closure.right[row[closure.parent[b]] * k + closure.letter[b]];
      }
    }
    return table;
  }

}  // namespace aplike::detail
