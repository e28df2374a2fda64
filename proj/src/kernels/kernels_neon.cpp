#include "bctkit/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace bctkit::kernels::neon {

namespace {

constexpr std::size_t kLanes = 4;

// Byte shuffle sending lane i to lane i ^ (a & 3).
inline uint8x16_t partner_shuffle(std::uint32_t a) {
  alignas(16) std::uint8_t idx[16];
  const std::uint32_t s = a & (kLanes - 1);
  for (std::uint32_t lane = 0; lane < kLanes; ++lane) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      idx[4 * lane + b] = static_cast<std::uint8_t>(4 * (lane ^ s) + b);
    }
  }
  return vld1q_u8(idx);
}

inline uint32x4_t load_partner(const std::uint32_t* p, uint8x16_t shuffle) {
  return vreinterpretq_u32_u8(vqtbl1q_u8(vreinterpretq_u8_u32(vld1q_u32(p)), shuffle));
}

std::size_t count_xor_pairs(const std::uint32_t* v, std::size_t size, std::uint32_t a,
                            std::uint32_t target) {
  if (size < kLanes) return scalar::kernels().count_xor_pairs(v, size, a, target);
  const uint8x16_t shuffle = partner_shuffle(a);
  const uint32x4_t want = vdupq_n_u32(target);
  const std::size_t block = a & ~std::uint32_t{kLanes - 1};
  uint32x4_t acc = vdupq_n_u32(0);
  for (std::size_t x = 0; x < size; x += kLanes) {
    const uint32x4_t s = vld1q_u32(v + x);
    const uint32x4_t p = load_partner(v + (x ^ block), shuffle);
    acc = vsubq_u32(acc, vceqq_u32(veorq_u32(s, p), want));
  }
  return vaddvq_u32(acc);
}

void xor_difference(const std::uint32_t* v, std::size_t size, std::uint32_t a, std::uint32_t* out) {
  if (size < kLanes) {
    scalar::kernels().xor_difference(v, size, a, out);
    return;
  }
  const uint8x16_t shuffle = partner_shuffle(a);
  const std::size_t block = a & ~std::uint32_t{kLanes - 1};
  for (std::size_t x = 0; x < size; x += kLanes) {
    vst1q_u32(out + x, veorq_u32(vld1q_u32(v + x), load_partner(v + (x ^ block), shuffle)));
  }
}

void walsh_hadamard(std::int32_t* v, std::size_t size) {
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
        const int32x4_t u = vld1q_s32(v + j);
        const int32x4_t w = vld1q_s32(v + j + h);
        vst1q_s32(v + j, vaddq_s32(u, w));
        vst1q_s32(v + j + h, vsubq_s32(u, w));
      }
    }
  }
}

constexpr KernelSet kNeon{"neon", &count_xor_pairs, &xor_difference, &walsh_hadamard};

}  // namespace

const KernelSet* kernels() noexcept { return &kNeon; }

}  // namespace bctkit::kernels::neon

#else

namespace bctkit::kernels::neon {
const KernelSet* kernels() noexcept { return nullptr; }
}  // namespace bctkit::kernels::neon

#endif
