#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Inner loops of the exhaustive table computations. Each backend implements
// the same contract; the scalar one is the reference the others are tested
// against. Sizes are powers of two.

namespace bctkit::kernels {

struct KernelSet {
  const char* name;
  /// Number of x in [0, size) with v[x] ^ v[x ^ a] == target.
  std::size_t (*count_xor_pairs)(const std::uint32_t* v, std::size_t size, std::uint32_t a,
                                 std::uint32_t target);
  /// out[x] = v[x] ^ v[x ^ a].
  void (*xor_difference)(const std::uint32_t* v, std::size_t size, std::uint32_t a,
                         std::uint32_t* out);
  /// In-place unnormalised Walsh-Hadamard transform.
  void (*walsh_hadamard)(std::int32_t* v, std::size_t size);
};

namespace scalar {
const KernelSet& kernels() noexcept;
}
namespace avx2 {
/// Null when not compiled in.
const KernelSet* kernels() noexcept;
}
namespace neon {
const KernelSet* kernels() noexcept;
}

/// Backends compiled in and supported by the running CPU, scalar first.
std::vector<const KernelSet*> available();

/// The backend used by the analysis routines: the widest available one,
/// unless BCTKIT_KERNELS names another (e.g. "scalar").
const KernelSet& active();

/// Overrides the active backend by name; returns false if unavailable.
bool select(std::string_view name);

}  // namespace bctkit::kernels
