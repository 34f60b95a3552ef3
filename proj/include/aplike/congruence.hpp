#pragma once

// Onto homomorphisms presented as congruence partitions. Only principal
// constructions are offered; the congruence lattice is never enumerated.

#include <utility>
#include <vector>

#include "aplike/monoid.hpp"

namespace aplike {

  //! Class index of every element, classes numbered by their least member.
  using Partition = std::vector<element_id>;

  //! Least congruence identifying each given pair.
  Partition congruence_generated_by(Monoid const&                                      M,
                                    std::vector<std::pair<element_id, element_id>> const& pairs);

  //! Rees congruence of an ideal I (all of I collapsed to one class).
  Partition rees_congruence(Monoid const& M, PointSet const& ideal);

  struct Quotient {
    Monoid                  monoid;      // letters as in M, generators mapped to their classes
    std::vector<element_id> projection;  // element of M -> element of the quotient
  };

  //! Throws NotACongruence when the partition is not compatible with the
  //! multiplication, OutOfRange/InvalidInput when malformed.
  Quotient quotient(Monoid const& M, Partition const& partition);

  //! Direct image of a set under the projection.
  PointSet image(Quotient const& q, PointSet const& Z);

}  // namespace aplike
