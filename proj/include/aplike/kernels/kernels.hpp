#pragma once

// Data-parallel inner loops over multiplication tables and bitsets.
//
// Every kernel has a scalar reference implementation; an AVX2 variant is
// compiled when the toolchain targets x86-64 and selected at runtime when the
// CPU reports AVX2. The two are equivalence-tested (tests/unit/test_kernels).
// APLIKE_ISA=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "aplike/types.hpp"

namespace aplike::kernels {

  enum class Isa { scalar, avx2 };

  std::string_view to_string(Isa isa) noexcept;

  struct KernelTable {
    //! Flat index a*n*n + b*n + c of the first triple (row-major over a, b,
    //! c) with (ab)c != a(bc), or npos.
    std::size_t (*associativity_violation)(element_id const* table,
                                           std::size_t       n);
    //! out[i] = table[lhs[i] * n + rhs]
    void (*multiply_right)(element_id const* table,
                           std::size_t       n,
                           element_id const* lhs,
                           std::size_t       count,
                           element_id        rhs,
                           element_id*       out);
    //! out[i] = table[lhs * n + rhs[i]]
    void (*multiply_left)(element_id const* table,
                          std::size_t       n,
                          element_id        lhs,
                          element_id const* rhs,
                          std::size_t       count,
                          element_id*       out);
    void (*bits_or)(std::uint64_t* dst, std::uint64_t const* src, std::size_t words);
    void (*bits_and)(std::uint64_t* dst, std::uint64_t const* src, std::size_t words);
    bool (*bits_subset)(std::uint64_t const* a, std::uint64_t const* b, std::size_t words);
    bool (*bits_intersect)(std::uint64_t const* a,
                           std::uint64_t const* b,
                           std::size_t          words);
  };

  KernelTable const& scalar_kernels() noexcept;
  //! nullptr when the AVX2 translation unit was not built.
  KernelTable const* avx2_kernels() noexcept;

  bool cpu_supports(Isa isa) noexcept;

  //! Kernel set used by the library; resolved once from the CPU and the
  //! APLIKE_ISA environment variable.
  KernelTable const& active() noexcept;
  Isa                active_isa() noexcept;
  //! Override the runtime choice (tests, benchmarks). Returns false when the
  //! requested ISA is unavailable, leaving the selection unchanged.
  bool select(Isa isa) noexcept;

}  // namespace aplike::kernels
