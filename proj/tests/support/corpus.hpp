#pragma once

#include <string>
#include <vector>

#include "aplike/monoid.hpp"

namespace aplike::testing {

  // Named examples. Element ids:
  //   trivial  0 = 1
  //   U1       0 = 1, 1 = 0
  //   Z2       0 = 1, 1 = g
  //   Z_n      k = g^k
  //   LZ1      0 = 1, 1 = a, 2 = b   (xy = x for x, y in {a, b})
  //   RZ1      0 = 1, 1 = a, 2 = b   (xy = y)
  Monoid trivial();
  Monoid u1();
  Monoid cyclic(std::size_t n);
  Monoid lz1();
  Monoid rz1();

  struct NamedMonoid {
    std::string name;
    Monoid      monoid;
  };

  //! Every monoid of order <= 4 up to isomorphism, then the curated
  //! aperiodic families.
  std::vector<NamedMonoid> const& corpus();
  //! The exhaustive part of corpus() only.
  std::vector<NamedMonoid> const& small_corpus();

  std::string data_path(std::string const& file);

  //! All words over `letters` letters of length <= max_length, shortlex.
  std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length);

  //! Every subset of {0..n-1} as a PointSet, empty set first.
  std::vector<PointSet> all_subsets(std::size_t n);

}  // namespace aplike::testing
