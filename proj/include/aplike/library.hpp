#pragma once

// Small monoids used as witnesses: every monoid of order <= 4 up to
// isomorphism, and a handful of larger aperiodic families.

#include <cstddef>
#include <string>
#include <vector>

#include "aplike/monoid.hpp"

namespace aplike {

  inline constexpr std::size_t MAX_EXHAUSTIVE_ORDER = 4;

  struct LibraryMonoid {
    std::string name;
    Monoid      monoid;
    bool        aperiodic = false;
  };

  //! One representative per isomorphism class of monoids of exactly the
  //! given order: identity 0, table lexicographically least among its
  //! relabellings, generators chosen greedily. Throws OrderTooLarge past
  //! MAX_EXHAUSTIVE_ORDER.
  std::vector<Monoid> enumerate_monoids(std::size_t order, bool aperiodic_only);

  //! Chain semilattice 1 > e_1 > ... > e_{order-1}.
  Monoid chain_semilattice(std::size_t order);
  //! k left zeros (xy = x) with an identity adjoined.
  Monoid left_zero_monoid(std::size_t k);
  //! k right zeros (xy = y) with an identity adjoined.
  Monoid right_zero_monoid(std::size_t k);
  //! The aperiodic Brandt monoid B2 with an identity adjoined.
  Monoid brandt_monoid();
  //! A2 with an identity adjoined.
  Monoid a2_monoid();

  //! Larger aperiodic monoids outside the exhaustive range.
  std::vector<LibraryMonoid> curated_aperiodic();

  //! Exhaustive aperiodic monoids of order 1..max_order, named "A<order>.<k>",
  //! followed by curated_aperiodic() when `curated` is set.
  std::vector<LibraryMonoid> aperiodic_library(std::size_t max_order, bool curated = true);

  //! Every monoid of order 1..max_order, named "M<order>.<k>" in
  //! enumeration order, the aperiodic flag set per entry.
  std::vector<LibraryMonoid> full_library(std::size_t max_order);

}  // namespace aplike
