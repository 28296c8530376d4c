#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace numrad::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::scalar,         "scalar",           detail::rot2Scalar,  detail::axpyScalar,
    detail::dotcScalar,  detail::dotuScalar, detail::axpbyScalar, detail::sumsqScalar,
};

#if defined(NUMRAD_HAVE_AVX2)
constexpr KernelTable kAvx2{
    Isa::avx2,         "avx2",           detail::rot2Avx2,  detail::axpyAvx2,
    detail::dotcAvx2,  detail::dotuAvx2, detail::axpbyAvx2, detail::sumsqAvx2,
};
#endif

const KernelTable* chooseDefault() noexcept {
  const char* env = std::getenv("NUMRAD_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return &kScalar;
  if (const KernelTable* avx = avx2Table(); avx && cpuHasAvx2()) return avx;
  return &kScalar;
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> table{chooseDefault()};
  return table;
}

}  // namespace

const KernelTable& scalarTable() noexcept { return kScalar; }

const KernelTable* avx2Table() noexcept {
#if defined(NUMRAD_HAVE_AVX2)
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpuHasAvx2() noexcept {
#if defined(NUMRAD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
#else
  return false;
#endif
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

bool select(Isa isa) noexcept {
  if (isa == Isa::scalar) {
    slot().store(&kScalar, std::memory_order_release);
    return true;
  }
  const KernelTable* avx = avx2Table();
  if (!avx || !cpuHasAvx2()) return false;
  slot().store(avx, std::memory_order_release);
  return true;
}

std::string_view isaName(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace numrad::kernels
