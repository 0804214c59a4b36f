#include <cstdlib>
#include <string_view>

#include "vtt/kernels.hpp"

namespace vtt::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", &detail::and_popcount_scalar, &detail::signed_permute_scalar};

#if defined(VTT_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{"avx2", &detail::and_popcount_avx2, &detail::signed_permute_avx2};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}
#endif

const KernelTable& select() noexcept {
  const char* forced = std::getenv("VTT_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return kScalar;
  if (const KernelTable* t = avx2_table()) return *t;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(VTT_HAVE_AVX2_KERNELS)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_table() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace vtt::kernels
