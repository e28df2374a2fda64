// Built with -mavx2; only entered after a runtime CPU check.

#include "bctkit/kernels.hpp"

#if defined(BCTKIT_HAVE_AVX2)

#include <immintrin.h>

namespace bctkit::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 8;

// Lane-permutation for the partner block: x ^ a maps block (x ^ (a & ~7)) onto
// the current block with lanes swapped by the low three bits of a.
inline __m256i partner_permutation(std::uint32_t a) {
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  return _mm256_xor_si256(lane, _mm256_set1_epi32(static_cast<int>(a & (kLanes - 1))));
}

inline std::size_t horizontal_sum(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

std::size_t count_xor_pairs(const std::uint32_t* v, std::size_t size, std::uint32_t a,
                            std::uint32_t target) {
  if (size < kLanes) return scalar::kernels().count_xor_pairs(v, size, a, target);
  const __m256i perm = partner_permutation(a);
  const __m256i want = _mm256_set1_epi32(static_cast<int>(target));
  const std::size_t block = a & ~std::uint32_t{kLanes - 1};
  // Per-lane counters stay below 2^31 for any size handled here.
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t x = 0;
  for (; x + 2 * kLanes <= size; x += 2 * kLanes) {
    const __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + x));
    const __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + x + kLanes));
    const __m256i p0 = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + (x ^ block))), perm);
    const __m256i p1 = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + ((x + kLanes) ^ block))), perm);
    acc0 = _mm256_sub_epi32(acc0, _mm256_cmpeq_epi32(_mm256_xor_si256(s0, p0), want));
    acc1 = _mm256_sub_epi32(acc1, _mm256_cmpeq_epi32(_mm256_xor_si256(s1, p1), want));
  }
  for (; x < size; x += kLanes) {
    const __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + x));
    const __m256i p0 = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + (x ^ block))), perm);
    acc0 = _mm256_sub_epi32(acc0, _mm256_cmpeq_epi32(_mm256_xor_si256(s0, p0), want));
  }
  return horizontal_sum(_mm256_add_epi32(acc0, acc1));
}

void xor_difference(const std::uint32_t* v, std::size_t size, std::uint32_t a, std::uint32_t* out) {
  if (size < kLanes) {
    scalar::kernels().xor_difference(v, size, a, out);
    return;
  }
  const __m256i perm = partner_permutation(a);
  const std::size_t block = a & ~std::uint32_t{kLanes - 1};
  for (std::size_t x = 0; x < size; x += kLanes) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + x));
    const __m256i p = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + (x ^ block))), perm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + x), _mm256_xor_si256(s, p));
  }
}

void walsh_hadamard(std::int32_t* v, std::size_t size) {
  // Strides below the vector width stay scalar.
  std::size_t h = 1;
  for (; h < size && h < kLanes; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = v[j];
        const std::int32_t w = v[j + h];
        v[j] = u + w;
        v[j + h] = u - w;
      }
    }
  }
  for (; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += kLanes) {
        auto* lo = reinterpret_cast<__m256i*>(v + j);
        auto* hi = reinterpret_cast<__m256i*>(v + j + h);
        const __m256i u = _mm256_loadu_si256(lo);
        const __m256i w = _mm256_loadu_si256(hi);
        _mm256_storeu_si256(lo, _mm256_add_epi32(u, w));
        _mm256_storeu_si256(hi, _mm256_sub_epi32(u, w));
      }
    }
  }
}

constexpr KernelSet kAvx2{"avx2", &count_xor_pairs, &xor_difference, &walsh_hadamard};

}  // namespace

const KernelSet* kernels() noexcept { return &kAvx2; }

}  // namespace bctkit::kernels::avx2

#else

namespace bctkit::kernels::avx2 {
const KernelSet* kernels() noexcept { return nullptr; }
}  // namespace bctkit::kernels::avx2

#endif
