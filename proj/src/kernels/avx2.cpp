// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include "vtt/kernels.hpp"

namespace vtt::kernels::detail {

namespace {

// Nibble-lookup popcount per byte, summed into four 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

std::size_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(va, vb)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

void signed_permute_avx2(const SignedPermutation& perm, const std::uint32_t* in, std::uint32_t* out,
                         std::size_t count) noexcept {
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i flip = _mm256_set1_epi32(static_cast<int>(perm.xor_mask));
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
    __m256i acc = _mm256_setzero_si256();
    for (std::uint32_t i = 0; i < perm.width; ++i) {
      __m256i bit = _mm256_and_si256(_mm256_srl_epi32(v, _mm_cvtsi32_si128(static_cast<int>(i))), one);
      acc = _mm256_or_si256(acc, _mm256_sll_epi32(bit, _mm_cvtsi32_si128(perm.target[i])));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), _mm256_xor_si256(acc, flip));
  }
  for (; k < count; ++k) out[k] = apply_signed_permutation(perm, in[k]);
}

}  // namespace vtt::kernels::detail
