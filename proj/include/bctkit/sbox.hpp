#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bctkit/random.hpp"

namespace bctkit {

/// Lookup table of a map on n-bit words; the unit of analysis.
class SBoxTable {
 public:
  SBoxTable() = default;
  /// Throws InvalidParams unless values has 2^n entries, each below 2^n.
  SBoxTable(unsigned n, std::vector<std::uint32_t> values);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint32_t operator[](std::size_t x) const noexcept { return values_[x]; }
  std::span<const std::uint32_t> values() const noexcept { return values_; }
  const std::uint32_t* data() const noexcept { return values_.data(); }

  friend bool operator==(const SBoxTable&, const SBoxTable&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint32_t> values_;
};

bool is_permutation(const SBoxTable& t);
/// Throws NotAPermutation.
SBoxTable invert(const SBoxTable& t);

enum class SpectrumKind { Ddt, Bct, BctLqsl, Walsh };
enum class Mode { Full, MaxOnly, Sampled };

const char* kind_name(SpectrumKind kind) noexcept;
const char* mode_name(Mode mode) noexcept;
/// Throws InvalidParams on unknown names.
Mode parse_mode(const std::string& name);

struct AnalysisOptions {
  Mode mode = Mode::Full;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;       // 0 = all hardware threads
  unsigned budget_log2 = 36;  // refuse exhaustive runs above 2^budget elementary steps
};

/// Largest entry over the kind's nonzero-input range; for WALSH the value is max |W|.
struct SpectrumSummary {
  SpectrumKind kind = SpectrumKind::Ddt;
  unsigned n = 0;
  std::int64_t value = 0;
  std::uint32_t argmax_a = 0;
  std::uint32_t argmax_b = 0;
  Mode mode = Mode::Full;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // evaluated entries in sampled mode
};

/// DDT, BCT or Walsh table. Entries are stored (row a, column b) only in
/// full mode, which is limited to n <= 12.
struct SpectrumTable {
  SpectrumSummary summary;
  std::vector<std::int16_t> entries;

  bool has_entries() const noexcept { return !entries.empty(); }
  int at(std::uint32_t a, std::uint32_t b) const noexcept {
    return entries[(std::size_t{a} << summary.n) + b];
  }
};

inline constexpr unsigned kMaxFullTableBits = 12;

// Single entries, O(2^n) each.
std::uint32_t ddt_entry(const SBoxTable& t, std::uint32_t a, std::uint32_t b);
/// Definitional entry; inverse must be invert(t).
std::uint32_t bct_entry(const SBoxTable& t, const SBoxTable& inverse, std::uint32_t a, std::uint32_t b);
/// Inverse-free pair count S(a, b) = #{(x, y): F(x+a)+F(y+a) = b, F(x)+F(y) = b}.
std::uint32_t bct_lqsl(const SBoxTable& t, std::uint32_t a, std::uint32_t b);
std::int32_t walsh_entry(const SBoxTable& t, std::uint32_t a, std::uint32_t b);

// Whole-table analyses. Mode and sampling parameters come from opts.
SpectrumTable ddt(const SBoxTable& t, const AnalysisOptions& opts = {});
/// Throws NotAPermutation.
SpectrumTable bct(const SBoxTable& t, const AnalysisOptions& opts = {});
SpectrumTable bct_lqsl_table(const SBoxTable& t, const AnalysisOptions& opts = {});
SpectrumTable walsh(const SBoxTable& t, const AnalysisOptions& opts = {});

unsigned delta_uniformity(const SBoxTable& t, unsigned threads = 0);
unsigned boomerang_uniformity(const SBoxTable& t, unsigned threads = 0);
unsigned boomerang_uniformity_lqsl(const SBoxTable& t, unsigned threads = 0);
/// 2^(n-1) - max|W|/2 over nonzero output masks.
unsigned nonlinearity(const SBoxTable& t, unsigned threads = 0);

/// Affine bijection x -> M x + c of GF(2)^n.
struct AffineMap {
  unsigned n = 0;
  std::vector<std::uint64_t> columns;
  std::uint64_t shift = 0;

  std::uint32_t apply(std::uint32_t x) const noexcept;
};

/// Random invertible affine map (matrix drawn by rejection).
AffineMap random_affine(unsigned n, Rng& rng);
/// outer o t o inner.
SBoxTable compose(const AffineMap& outer, const SBoxTable& t, const AffineMap& inner);

}  // namespace bctkit
