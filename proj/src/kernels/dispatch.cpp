#include <atomic>
#include <cstdlib>
#include <string_view>

#include "aplike/kernels/kernels.hpp"

namespace aplike::kernels {

#ifdef APLIKE_HAVE_AVX2
  KernelTable const* avx2_kernels_impl() noexcept;
#endif

  std::string_view to_string(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
  }

  KernelTable const* avx2_kernels() noexcept {
#ifdef APLIKE_HAVE_AVX2
    return avx2_kernels_impl();
#else
    return nullptr;
#endif
  }

  bool cpu_supports(Isa isa) noexcept {
    if (isa == Isa::scalar) {
      return true;
    }
#if defined(APLIKE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  }

  namespace {

    Isa initial_isa() noexcept {
      if (char const* env = std::getenv("APLIKE_ISA")) {
        if (std::string_view(env) == "scalar") {
          return Isa::scalar;
        }
      }
      return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }

    std::atomic<Isa>& current() noexcept {
      static std::atomic<Isa> isa{initial_isa()};
      return isa;
    }

  }  // namespace

  Isa active_isa() noexcept {
    return current().load(std::memory_order_relaxed);
  }

  KernelTable const& active() noexcept {
    if (active_isa() == Isa::avx2) {
      return *avx2_kernels();
    }
    return scalar_kernels();
  }

  bool select(Isa isa) noexcept {
    if (!cpu_supports(isa)) {
      return false;
    }
    current().store(isa, std::memory_order_relaxed);
    return true;
  }

}  // namespace aplike::kernels
