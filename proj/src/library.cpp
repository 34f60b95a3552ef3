#include "aplike/library.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "aplike/error.hpp"
#include "aplike/structure.hpp"

namespace aplike {

  namespace {

    constexpr element_id UNSET = static_cast<element_id>(-1);

    // Checks (ab)c = a(bc) for every triple whose four products are known.
    bool partially_associative(std::vector<element_id> const& t, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const ab = t[a * n + b];
          if (ab == UNSET) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            auto const bc = t[b * n + c];
            if (bc == UNSET) {
              continue;
            }
            auto const lhs = t[ab * n + c];
            auto const rhs = t[a * n + bc];
            if (lhs != UNSET && rhs != UNSET && lhs != rhs) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::vector<element_id> relabel(std::vector<element_id> const& t,
                                    std::size_t                    n,
                                    std::vector<element_id> const& perm) {
      std::vector<element_id> result(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          result[perm[a] * n + perm[b]] = perm[t[a * n + b]];
        }
      }
      return result;
    }

    // Lexicographically least relabelling fixing the identity 0.
    std::vector<element_id> canonical(std::vector<element_id> const& t, std::size_t n) {
      std::vector<element_id> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      auto best = t;
      do {
        best = std::min(best, relabel(t, n, perm));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      return best;
    }

    void fill(std::vector<element_id>&              t,
              std::size_t                           n,
              std::size_t                           cell,
              std::set<std::vector<element_id>>&    found) {
      if (cell == n * n) {
        found.insert(canonical(t, n));
        return;
      }
      auto const a = cell / n;
      auto const b = cell % n;
      if (a == 0 || b == 0) {
        fill(t, n, cell + 1, found);
        return;
      }
      for (element_id v = 0; v < n; ++v) {
        t[cell] = v;
        if (partially_associative(t, n)) {
          fill(t, n, cell + 1, found);
        }
      }
      t[cell] = UNSET;
    }

    Monoid from_flat(std::size_t n, std::vector<element_id> table) {
      auto gens = greedy_generators(n, table, 0);
      return Monoid::from_flat_table(n, std::move(table), 0, std::move(gens));
    }

  }  // namespace

  std::vector<Monoid> enumerate_monoids(std::size_t order, bool aperiodic_only) {
    if (order == 0) {
      throw Error(ErrorCode::InvalidInput, "order must be positive");
    }
    if (order > MAX_EXHAUSTIVE_ORDER) {
      throw Error(ErrorCode::OrderTooLarge,
                  "exhaustive enumeration stops at order " + std::to_string(MAX_EXHAUSTIVE_ORDER)
                      + ", asked for " + std::to_string(order));
    }
    std::size_t const       n = order;
    std::vector<element_id> t(n * n, UNSET);
    for (std::size_t a = 0; a < n; ++a) {
      t[a]         = static_cast<element_id>(a);
      t[a * n]     = static_cast<element_id>(a);
    }
    std::set<std::vector<element_id>> found;
    fill(t, n, 0, found);
    std::vector<Monoid> result;
    for (auto const& table : found) {
      auto M = from_flat(n, table);
      if (!aperiodic_only || is_aperiodic(M)) {
        result.push_back(std::move(M));
      }
    }
    return result;
  }

  Monoid chain_semilattice(std::size_t order) {
    std::vector<element_id> t(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        t[a * order + b] = static_cast<element_id>(std::max(a, b));
      }
    }
    return from_flat(order, std::move(t));
  }

  namespace {

    Monoid zeros_with_identity(std::size_t k, bool left) {
      std::size_t const       n = k + 1;
      std::vector<element_id> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t v = a == 0 ? b : b == 0 ? a : left ? a : b;
          t[a * n + b]  = static_cast<element_id>(v);
        }
      }
      return from_flat(n, std::move(t));
    }

  }  // namespace

  Monoid left_zero_monoid(std::size_t k) {
    return zeros_with_identity(k, true);
  }

  Monoid right_zero_monoid(std::size_t k) {
    return zeros_with_identity(k, false);
  }

  Monoid brandt_monoid() {
    // Partial bijections of {0,1}, point 2 absorbing.
    return Monoid::from_transformations(3, {{"a", {1, 2, 2}}, {"b", {2, 0, 2}}});
  }

  Monoid a2_monoid() {
    return Monoid::from_transformations(3, {{"a", {0, 0, 2}}, {"b", {1, 2, 2}}});
  }

  std::vector<LibraryMonoid> curated_aperiodic() {
    return {
        {"chain5", chain_semilattice(5), true},
        {"chain6", chain_semilattice(6), true},
        {"LZ4^1", left_zero_monoid(4), true},
        {"RZ4^1", right_zero_monoid(4), true},
        {"B2^1", brandt_monoid(), true},
        {"A2^1", a2_monoid(), true},
    };
  }

  std::vector<LibraryMonoid> aperiodic_library(std::size_t max_order, bool curated) {
    std::vector<LibraryMonoid> result;
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::size_t k = 0;
      for (auto& M : enumerate_monoids(n, true)) {
        result.push_back({"A" + std::to_string(n) + "." + std::to_string(k++), std::move(M), true});
      }
    }
    if (curated) {
      for (auto& entry : curated_aperiodic()) {
        result.push_back(std::move(entry));
      }
    }
    return result;
  }

  std::vector<LibraryMonoid> full_library(std::size_t max_order) {
    std::vector<LibraryMonoid> result;
    for (std::size_t n = 1; n <= max_order; ++n) {
      std::size_t k = 0;
      for (auto& M : enumerate_monoids(n, false)) {
        bool const ap = is_aperiodic(M);
        result.push_back({"M" + std::to_string(n) + "." + std::to_string(k++), std::move(M), ap});
      }
    }
    return result;
  }

}  // namespace aplike
