#include "bctkit/kernels.hpp"

namespace bctkit::kernels::scalar {

namespace {

std::size_t count_xor_pairs(const std::uint32_t* v, std::size_t size, std::uint32_t a,
                            std::uint32_t target) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < size; ++x) {
    count += (v[x] ^ v[x ^ a]) == target;
  }
  return count;
}

void xor_difference(const std::uint32_t* v, std::size_t size, std::uint32_t a, std::uint32_t* out) {
  for (std::size_t x = 0; x < size; ++x) out[x] = v[x] ^ v[x ^ a];
}

void walsh_hadamard(std::int32_t* v, std::size_t size) {
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = v[j];
        const std::int32_t w = v[j + h];
        v[j] = u + w;
        v[j + h] = u - w;
      }
    }
  }
}

constexpr KernelSet kScalar{"scalar", &count_xor_pairs, &xor_difference, &walsh_hadamard};

}  // namespace

const KernelSet& kernels() noexcept { return kScalar; }

}  // namespace bctkit::kernels::scalar
