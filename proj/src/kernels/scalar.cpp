#include "aplike/kernels/kernels.hpp"

namespace aplike::kernels {

  namespace {

    std::size_t associativity_violation(element_id const* table, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        element_id const* row_a = table + a * n;
        for (std::size_t b = 0; b < n; ++b) {
          element_id const* row_ab = table + row_a[b] * n;
          element_id const* row_b  = table + b * n;
          for (std::size_t c = 0; c < n; ++c) {
            if (row_ab[c] != row_a[row_b[c]]) {
              return (a * n + b) * n + c;
            }
          }
        }
      }
      return npos;
    }

    void multiply_right(element_id const* table,
                        std::size_t       n,
                        element_id const* lhs,
                        std::size_t       count,
                        element_id        rhs,
                        element_id*       out) {
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = table[lhs[i] * n + rhs];
      }
    }

    void multiply_left(element_id const* table,
                       std::size_t       n,
                       element_id        lhs,
                       element_id const* rhs,
                       std::size_t       count,
                       element_id*       out) {
      element_id const* row = table + lhs * n;
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = row[rhs[i]];
      }
    }

    void bits_or(std::uint64_t* dst, std::uint64_t const* src, std::size_t words) {
      for (std::size_t i = 0; i < words; ++i) {
        dst[i] |= src[i];
      }
    }

    void bits_and(std::uint64_t* dst, std::uint64_t const* src, std::size_t words) {
      for (std::size_t i = 0; i < words; ++i) {
        dst[i] &= src[i];
      }
    }

    bool bits_subset(std::uint64_t const* a, std::uint64_t const* b, std::size_t words) {
      for (std::size_t i = 0; i < words; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool bits_intersect(std::uint64_t const* a, std::uint64_t const* b, std::size_t words) {
      for (std::size_t i = 0; i < words; ++i) {
        if ((a[i] & b[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    constexpr KernelTable SCALAR{associativity_violation,
                                 multiply_right,
                                 multiply_left,
                                 bits_or,
                                 bits_and,
                                 bits_subset,
                                 bits_intersect};

  }  // namespace

  KernelTable const& scalar_kernels() noexcept {
    return SCALAR;
  }

}  // namespace aplike::kernels
