#include "aplike/congruence.hpp"

#include <numeric>
#include <string>

#include "aplike/error.hpp"

namespace aplike {

  namespace {

    struct UnionFind {
      std::vector<element_id> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), element_id{0});
      }

      element_id find(element_id a) {
        while (parent[a] != a) {
          parent[a] = parent[parent[a]];
          a         = parent[a];
        }
        return a;
      }

      bool unite(element_id a, element_id b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (a < b) {
          parent[b] = a;
        } else {
          parent[a] = b;
        }
        return true;
      }
    };

    Partition normalise(UnionFind& uf, std::size_t n) {
      Partition               result(n);
      std::vector<element_id> label(n, static_cast<element_id>(n));
      element_id              next = 0;
      for (element_id a = 0; a < n; ++a) {
        auto root = uf.find(a);
        if (label[root] == n) {
          label[root] = next++;
        }
        result[a] = label[root];
      }
      return result;
    }

  }  // namespace

  Partition congruence_generated_by(Monoid const&                                         M,
                                    std::vector<std::pair<element_id, element_id>> const& pairs) {
    std::size_t const n = M.order();
    UnionFind         uf(n);
    std::vector<std::pair<element_id, element_id>> pending;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw Error(ErrorCode::OutOfRange, "pair refers to an element outside the monoid");
      }
      if (uf.unite(a, b)) {
        pending.emplace_back(a, b);
      }
    }
    // Translating a merged pair by every generator on both sides is enough,
    // as the generators generate M.
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      for (auto const& g : M.generators()) {
        for (auto [x, y] : {std::pair{M.multiply(a, g.element), M.multiply(b, g.element)},
                            std::pair{M.multiply(g.element, a), M.multiply(g.element, b)}}) {
          if (uf.unite(x, y)) {
            pending.emplace_back(x, y);
          }
        }
      }
    }
    return normalise(uf, n);
  }

  Partition rees_congruence(Monoid const& M, PointSet const& ideal) {
    std::vector<std::pair<element_id, element_id>> pairs;
    if (!ideal.empty()) {
      auto first = ideal.first();
      ideal.for_each([&](element_id a) { pairs.emplace_back(first, a); });
    }
    return congruence_generated_by(M, pairs);
  }

  Quotient quotient(Monoid const& M, Partition const& partition) {
    std::size_t const n = M.order();
    if (partition.size() != n) {
      throw Error(ErrorCode::InvalidInput, "partition must assign a class to every element");
    }
    element_id classes = 0;
    for (auto c : partition) {
      classes = std::max<element_id>(classes, c + 1);
    }
    std::vector<element_id> representative(classes, static_cast<element_id>(n));
    for (element_id a = 0; a < n; ++a) {
      if (representative[partition[a]] == n) {
        representative[partition[a]] = a;
      }
    }
    for (element_id c = 0; c < classes; ++c) {
      if (representative[c] == n) {
        throw Error(ErrorCode::InvalidInput, "class " + std::to_string(c) + " is empty");
      }
    }
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        auto ra = representative[partition[a]];
        auto rb = representative[partition[b]];
        if (partition[M.multiply(a, b)] != partition[M.multiply(ra, rb)]) {
          throw Error(ErrorCode::NotACongruence,
                      "classes of " + std::to_string(a) + " and " + std::to_string(b)
                          + " do not multiply consistently");
        }
      }
    }
    std::vector<element_id> table(classes * classes);
    for (element_id c = 0; c < classes; ++c) {
      for (element_id d = 0; d < classes; ++d) {
        table[c * classes + d] = partition[M.multiply(representative[c], representative[d])];
      }
    }
    std::vector<Generator> gens;
    for (auto const& g : M.generators()) {
      gens.push_back({g.letter, partition[g.element]});
    }
    return {Monoid::trusted(classes, std::move(table), partition[M.identity()], std::move(gens)),
            partition};
  }

  PointSet image(Quotient const& q, PointSet const& Z) {
    PointSet result(q.monoid.order());
    Z.for_each([&](element_id a) { result.insert(q.projection[a]); });
    return result;
  }

}  // namespace aplike
