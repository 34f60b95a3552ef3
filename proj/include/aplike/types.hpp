#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace aplike {

  //! Dense element identifier: elements of an order-n monoid are 0..n-1.
  using element_id = std::uint32_t;

  inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace aplike
