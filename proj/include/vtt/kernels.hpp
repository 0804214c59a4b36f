#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference
// and, where the target supports it, an AVX2 variant. The variant is chosen
// once at runtime from CPU features; VTT_KERNELS=scalar forces the reference.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace vtt::kernels {

/// Bit permutation with sign flips on masks of at most 32 bits.
///
/// out = (sum over i of bit_i(in) << target[i]) ^ xor_mask. `target` must be
/// a permutation of [0, width).
struct SignedPermutation {
  std::uint32_t width = 0;
  std::array<std::uint8_t, 32> target{};
  std::uint32_t xor_mask = 0;
};

std::uint32_t apply_signed_permutation(const SignedPermutation& perm, std::uint32_t mask) noexcept;

struct KernelTable {
  std::string_view name;
  /// popcount(a & b) over equal-length word spans.
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
  /// out[k] = perm(in[k]) for every k; in and out have equal length.
  void (*signed_permute)(const SignedPermutation& perm, const std::uint32_t* in, std::uint32_t* out,
                         std::size_t count) noexcept;
};

const KernelTable& scalar_table() noexcept;
/// nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;
/// The table used by the library.
const KernelTable& active_table() noexcept;

inline std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  return active_table().and_popcount(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void signed_permute(const SignedPermutation& perm, std::span<const std::uint32_t> in,
                           std::span<std::uint32_t> out) noexcept {
  active_table().signed_permute(perm, in.data(), out.data(), in.size() < out.size() ? in.size() : out.size());
}

namespace detail {
std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
void signed_permute_scalar(const SignedPermutation& perm, const std::uint32_t* in, std::uint32_t* out,
                           std::size_t count) noexcept;
#if defined(VTT_HAVE_AVX2_KERNELS)
std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
void signed_permute_avx2(const SignedPermutation& perm, const std::uint32_t* in, std::uint32_t* out,
                         std::size_t count) noexcept;
#endif
}  // namespace detail

}  // namespace vtt::kernels
