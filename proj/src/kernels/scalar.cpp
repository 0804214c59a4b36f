#include <bit>

#include "vtt/kernels.hpp"

namespace vtt::kernels {

std::uint32_t apply_signed_permutation(const SignedPermutation& perm, std::uint32_t mask) noexcept {
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < perm.width; ++i) {
    out |= ((mask >> i) & 1u) << perm.target[i];
  }
  return out ^ perm.xor_mask;
}

namespace detail {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void signed_permute_scalar(const SignedPermutation& perm, const std::uint32_t* in, std::uint32_t* out,
                           std::size_t count) noexcept {
  for (std::size_t k = 0; k < count; ++k) out[k] = apply_signed_permutation(perm, in[k]);
}

}  // namespace detail
}  // namespace vtt::kernels
