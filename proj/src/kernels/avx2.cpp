// Compiled with -mavx2; only reached after cpu_supports(Isa::avx2).

#include <immintrin.h>

#include "aplike/kernels/kernels.hpp"

namespace aplike::kernels {

  namespace {

    // 32-bit gather offsets: beyond this order a*n + b overflows int32.
    constexpr std::size_t GATHER_LIMIT = 46340;

    std::size_t associativity_violation(element_id const* table, std::size_t n) {
      if (n > GATHER_LIMIT) {
        return scalar_kernels().associativity_violation(table, n);
      }
      auto const* itable = reinterpret_cast<int const*>(table);
      for (std::size_t a = 0; a < n; ++a) {
        int const* row_a = itable + a * n;
        for (std::size_t b = 0; b < n; ++b) {
          int const*  row_ab = itable + static_cast<std::size_t>(row_a[b]) * n;
          int const*  row_b  = itable + b * n;
          std::size_t c      = 0;
          for (; c + 8 <= n; c += 8) {
            __m256i lhs = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_ab + c));
            __m256i bc  = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(row_b + c));
            __m256i rhs = _mm256_i32gather_epi32(row_a, bc, 4);
            __m256i eq  = _mm256_cmpeq_epi32(lhs, rhs);
            auto    mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
            if (mask != 0xFFu) {
              return (a * n + b) * n + c
                     + static_cast<std::size_t>(__builtin_ctz(~mask & 0xFFu));
            }
          }
          for (; c < n; ++c) {
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
      if (n > GATHER_LIMIT) {
        scalar_kernels().multiply_right(table, n, lhs, count, rhs, out);
        return;
      }
      auto const*   itable = reinterpret_cast<int const*>(table);
      __m256i const vn     = _mm256_set1_epi32(static_cast<int>(n));
      __m256i const vr     = _mm256_set1_epi32(static_cast<int>(rhs));
      std::size_t   i      = 0;
      for (; i + 8 <= count; i += 8) {
        __m256i l   = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(lhs + i));
        __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(l, vn), vr);
        __m256i v   = _mm256_i32gather_epi32(itable, idx, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
      }
      for (; i < count; ++i) {
        out[i] = table[lhs[i] * n + rhs];
      }
    }

    void multiply_left(element_id const* table,
                       std::size_t       n,
                       element_id        lhs,
                       element_id const* rhs,
                       std::size_t       count,
                       element_id*       out) {
      auto const* row = reinterpret_cast<int const*>(table + lhs * n);
      std::size_t i   = 0;
      for (; i + 8 <= count; i += 8) {
        __m256i r = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(rhs + i));
        __m256i v = _mm256_i32gather_epi32(row, r, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
      }
      for (; i < count; ++i) {
        out[i] = table[lhs * n + rhs[i]];
      }
    }

    void bits_or(std::uint64_t* dst, std::uint64_t const* src, std::size_t words) {
      std::size_t i = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
      }
      for (; i < words; ++i) {
        dst[i] |= src[i];
      }
    }

    void bits_and(std::uint64_t* dst, std::uint64_t const* src, std::size_t words) {
      std::size_t i = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
      }
      for (; i < words; ++i) {
        dst[i] &= src[i];
      }
    }

    bool bits_subset(std::uint64_t const* a, std::uint64_t const* b, std::size_t words) {
      std::size_t i = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        // testc(vb, va) == 1 iff (~vb & va) == 0
        if (!_mm256_testc_si256(vb, va)) {
          return false;
        }
      }
      for (; i < words; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool bits_intersect(std::uint64_t const* a, std::uint64_t const* b, std::size_t words) {
      std::size_t i = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        if (!_mm256_testz_si256(va, vb)) {
          return true;
        }
      }
      for (; i < words; ++i) {
        if ((a[i] & b[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    constexpr KernelTable AVX2{associativity_violation,
                               multiply_right,
                               multiply_left,
                               bits_or,
                               bits_and,
                               bits_subset,
                               bits_intersect};

  }  // namespace

  KernelTable const* avx2_kernels_impl() noexcept {
    return &AVX2;
  }

}  // namespace aplike::kernels
