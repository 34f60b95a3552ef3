#pragma once

#include <cstddef>
#include <vector>

#include "aplike/point_set.hpp"

namespace aplike {

  //! All maximal cliques of the undirected graph on {0..n-1} whose adjacency
  //! rows are `adjacent` (irreflexive, symmetric). Bron-Kerbosch with
  //! Tomita pivoting; cliques come out in canonical order.
  std::vector<PointSet> maximal_cliques(std::vector<PointSet> const& adjacent);

}  // namespace aplike
