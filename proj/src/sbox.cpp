#include "bctkit/sbox.hpp"

#include <bit>
#include <cstdlib>

#include "bctkit/error.hpp"
#include "bctkit/gf2_linear.hpp"
#include "bctkit/kernels.hpp"
#include "bctkit/parallel.hpp"

namespace bctkit {

namespace {

constexpr unsigned kMaxTableBits = 24;

// Running maximum with a deterministic tie-break on the smallest (a, b), so
// merged per-worker results do not depend on scheduling.
struct Best {
  std::int64_t value = -1;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  void offer(std::int64_t v, std::uint32_t va, std::uint32_t vb) noexcept {
    if (v > value || (v == value && (va < a || (va == a && vb < b)))) {
      value = v;
      a = va;
      b = vb;
    }
  }
  void merge(const Best& other) noexcept {
    if (other.value >= 0) offer(other.value, other.a, other.b);
  }
};

unsigned work_log2(SpectrumKind kind, unsigned n) {
  switch (kind) {
    case SpectrumKind::Ddt: return 2 * n;
    case SpectrumKind::Bct: return 3 * n;
    case SpectrumKind::BctLqsl: return 2 * n + 2;
    case SpectrumKind::Walsh: return 2 * n + static_cast<unsigned>(std::bit_width(n));
  }
  return 3 * n;
}

void check_budget(SpectrumKind kind, unsigned n, const AnalysisOptions& opts) {
  if (opts.mode == Mode::Sampled) return;
  if (opts.mode == Mode::Full && n > kMaxFullTableBits) {
    throw Error(Errc::ScaleRefusal, std::string("full ") + kind_name(kind) + " tables are stored only for n <= " +
                                        std::to_string(kMaxFullTableBits) + "; use --mode max-only or sampled");
  }
  if (work_log2(kind, n) > opts.budget_log2) {
    throw Error(Errc::ScaleRefusal, std::string("exhaustive ") + kind_name(kind) + " at n=" + std::to_string(n) +
                                        " needs about 2^" + std::to_string(work_log2(kind, n)) +
                                        " steps, over the budget of 2^" + std::to_string(opts.budget_log2) +
                                        "; use --mode sampled");
  }
}

SpectrumTable make_result(SpectrumKind kind, unsigned n, const AnalysisOptions& opts, const Best& best,
                          std::vector<std::int16_t> entries, std::uint64_t samples) {
  SpectrumTable out;
  out.summary.kind = kind;
  out.summary.n = n;
  out.summary.value = best.value < 0 ? 0 : best.value;
  out.summary.argmax_a = best.a;
  out.summary.argmax_b = best.b;
  out.summary.mode = opts.mode;
  out.summary.seed = opts.seed;
  out.summary.samples = samples;
  out.entries = std::move(entries);
  return out;
}

// S(a, .) for every b: group x by D_a(x) = F(x) + F(x + a); pairs in the
// same group satisfy the first equation, and F(x) + F(y) picks the column.
void lqsl_row(const SBoxTable& t, std::uint32_t a, std::vector<std::uint32_t>& scratch,
              std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& start,
              std::vector<std::uint32_t>& row) {
  const std::size_t size = t.size();
  scratch.resize(size);
  order.resize(size);
  start.assign(size + 1, 0);
  row.assign(size, 0);
  kernels::active().xor_difference(t.data(), size, a, scratch.data());
  for (std::size_t x = 0; x < size; ++x) ++start[scratch[x] + 1];
  for (std::size_t d = 0; d < size; ++d) start[d + 1] += start[d];
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (std::size_t x = 0; x < size; ++x) order[fill[scratch[x]]++] = static_cast<std::uint32_t>(x);
  for (std::size_t d = 0; d < size; ++d) {
    const std::uint32_t lo = start[d];
    const std::uint32_t hi = start[d + 1];
    for (std::uint32_t i = lo; i < hi; ++i) {
      const std::uint32_t fx = t[order[i]];
      row[0] += 1;
      for (std::uint32_t j = i + 1; j < hi; ++j) row[fx ^ t[order[j]]] += 2;
    }
  }
}

void walsh_column(const SBoxTable& t, std::uint32_t b, std::vector<std::int32_t>& column) {
  const std::size_t size = t.size();
  column.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    column[x] = (std::popcount(b & t[x]) & 1) ? -1 : 1;
  }
  kernels::active().walsh_hadamard(column.data(), size);
}

std::vector<std::uint32_t> gamma_table(const SBoxTable& t, const SBoxTable& inverse, std::uint32_t b) {
  std::vector<std::uint32_t> gamma(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) gamma[x] = inverse[t[x] ^ b];
  return gamma;
}

template <class EntryFn>
SpectrumTable sampled(SpectrumKind kind, const SBoxTable& t, const AnalysisOptions& opts, bool b_may_be_zero,
                      bool a_may_be_zero, EntryFn&& entry) {
  Rng rng(opts.seed);
  const std::uint64_t size = t.size();
  Best best;
  for (std::uint64_t i = 0; i < opts.samples; ++i) {
    const auto a = static_cast<std::uint32_t>(a_may_be_zero ? uniform_below(rng, size) : uniform_between(rng, 1, size - 1));
    const auto b = static_cast<std::uint32_t>(b_may_be_zero ? uniform_below(rng, size) : uniform_between(rng, 1, size - 1));
    best.offer(entry(a, b), a, b);
  }
  return make_result(kind, t.n(), opts, best, {}, opts.samples);
}

}  // namespace

SBoxTable::SBoxTable(unsigned n, std::vector<std::uint32_t> values) : n_(n), values_(std::move(values)) {
  if (n == 0 || n > kMaxTableBits) {
    throw Error(Errc::InvalidParams, "table width must lie in [1, " + std::to_string(kMaxTableBits) + "]");
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error(Errc::InvalidParams, "table must have exactly 2^n entries");
  }
  for (std::uint32_t v : values_) {
    if (v >> n) throw Error(Errc::InvalidParams, "table value out of range");
  }
}

bool is_permutation(const SBoxTable& t) {
  std::vector<bool> seen(t.size(), false);
  for (std::uint32_t v : t.values()) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

SBoxTable invert(const SBoxTable& t) {
  if (!is_permutation(t)) throw Error(Errc::NotAPermutation, "table is not a bijection");
  std::vector<std::uint32_t> inv(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) inv[t[x]] = static_cast<std::uint32_t>(x);
  return SBoxTable(t.n(), std::move(inv));
}

const char* kind_name(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::Ddt: return "DDT";
    case SpectrumKind::Bct: return "BCT";
    case SpectrumKind::BctLqsl: return "BCT_LQSL";
    case SpectrumKind::Walsh: return "WALSH";
  }
  return "?";
}

const char* mode_name(Mode mode) noexcept {
  switch (mode) {
    case Mode::Full: return "full";
    case Mode::MaxOnly: return "max-only";
    case Mode::Sampled: return "sampled";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "full") return Mode::Full;
  if (name == "max-only") return Mode::MaxOnly;
  if (name == "sampled") return Mode::Sampled;
  throw Error(Errc::InvalidParams, "unknown mode '" + name + "'");
}

std::uint32_t ddt_entry(const SBoxTable& t, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(kernels::active().count_xor_pairs(t.data(), t.size(), a, b));
}

std::uint32_t bct_entry(const SBoxTable& t, const SBoxTable& inverse, std::uint32_t a, std::uint32_t b) {
  const auto gamma = gamma_table(t, inverse, b);
  return static_cast<std::uint32_t>(kernels::active().count_xor_pairs(gamma.data(), gamma.size(), a, a));
}

std::uint32_t bct_lqsl(const SBoxTable& t, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> scratch, order, start, row;
  lqsl_row(t, a, scratch, order, start, row);
  return row[b];
}

std::int32_t walsh_entry(const SBoxTable& t, std::uint32_t a, std::uint32_t b) {
  std::int32_t sum = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    sum += ((std::popcount(b & t[x]) ^ std::popcount(a & static_cast<std::uint32_t>(x))) & 1) ? -1 : 1;
  }
  return sum;
}

SpectrumTable ddt(const SBoxTable& t, const AnalysisOptions& opts) {
  check_budget(SpectrumKind::Ddt, t.n(), opts);
  if (opts.mode == Mode::Sampled) {
    return sampled(SpectrumKind::Ddt, t, opts, true, false,
                   [&](std::uint32_t a, std::uint32_t b) { return ddt_entry(t, a, b); });
  }
  const std::size_t size = t.size();
  const bool store = opts.mode == Mode::Full;
  std::vector<std::int16_t> entries(store ? size * size : 0);
  const unsigned threads = resolve_threads(opts.threads);
  std::vector<Best> best(threads);
  parallel_for(size, threads, [&](std::size_t a, unsigned w) {
    std::vector<std::uint32_t> diff(size);
    std::vector<std::uint32_t> row(size, 0);
    kernels::active().xor_difference(t.data(), size, static_cast<std::uint32_t>(a), diff.data());
    for (std::uint32_t d : diff) ++row[d];
    for (std::size_t b = 0; b < size; ++b) {
      if (store) entries[a * size + b] = static_cast<std::int16_t>(row[b]);
      if (a != 0) best[w].offer(row[b], static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  });
  for (std::size_t w = 1; w < best.size(); ++w) best[0].merge(best[w]);
  return make_result(SpectrumKind::Ddt, t.n(), opts, best[0], std::move(entries), 0);
}

SpectrumTable bct(const SBoxTable& t, const AnalysisOptions& opts) {
  check_budget(SpectrumKind::Bct, t.n(), opts);
  const SBoxTable inverse = invert(t);
  if (opts.mode == Mode::Sampled) {
    return sampled(SpectrumKind::Bct, t, opts, false, false,
                   [&](std::uint32_t a, std::uint32_t b) { return bct_entry(t, inverse, a, b); });
  }
  const std::size_t size = t.size();
  const bool store = opts.mode == Mode::Full;
  std::vector<std::int16_t> entries(store ? size * size : 0);
  const unsigned threads = resolve_threads(opts.threads);
  std::vector<Best> best(threads);
  const kernels::KernelSet& k = kernels::active();
  // Columns b are independent: gamma_b(x) = F^-1(F(x) + b), then each row a
  // counts x with gamma_b(x) + gamma_b(x + a) = a.
  parallel_for(size, threads, [&](std::size_t b, unsigned w) {
    const auto gamma = gamma_table(t, inverse, static_cast<std::uint32_t>(b));
    for (std::size_t a = 0; a < size; ++a) {
      const auto count = k.count_xor_pairs(gamma.data(), size, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a));
      if (store) entries[a * size + b] = static_cast<std::int16_t>(count);
      if (a != 0 && b != 0) best[w].offer(static_cast<std::int64_t>(count), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  });
  for (std::size_t w = 1; w < best.size(); ++w) best[0].merge(best[w]);
  return make_result(SpectrumKind::Bct, t.n(), opts, best[0], std::move(entries), 0);
}

SpectrumTable bct_lqsl_table(const SBoxTable& t, const AnalysisOptions& opts) {
  check_budget(SpectrumKind::BctLqsl, t.n(), opts);
  if (opts.mode == Mode::Sampled) {
    return sampled(SpectrumKind::BctLqsl, t, opts, false, false,
                   [&](std::uint32_t a, std::uint32_t b) { return bct_lqsl(t, a, b); });
  }
  const std::size_t size = t.size();
  const bool store = opts.mode == Mode::Full;
  std::vector<std::int16_t> entries(store ? size * size : 0);
  const unsigned threads = resolve_threads(opts.threads);
  std::vector<Best> best(threads);
  parallel_for(size, threads, [&](std::size_t a, unsigned w) {
    std::vector<std::uint32_t> scratch, order, start, row;
    if (a == 0 && !store) return;  // row a = 0 is outside the maximum
    lqsl_row(t, static_cast<std::uint32_t>(a), scratch, order, start, row);
    for (std::size_t b = 0; b < size; ++b) {
      if (store) entries[a * size + b] = static_cast<std::int16_t>(row[b]);
      if (a != 0 && b != 0) best[w].offer(row[b], static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  });
  for (std::size_t w = 1; w < best.size(); ++w) best[0].merge(best[w]);
  return make_result(SpectrumKind::BctLqsl, t.n(), opts, best[0], std::move(entries), 0);
}

SpectrumTable walsh(const SBoxTable& t, const AnalysisOptions& opts) {
  check_budget(SpectrumKind::Walsh, t.n(), opts);
  if (opts.mode == Mode::Sampled) {
    return sampled(SpectrumKind::Walsh, t, opts, false, true,
                   [&](std::uint32_t a, std::uint32_t b) { return std::abs(walsh_entry(t, a, b)); });
  }
  const std::size_t size = t.size();
  const bool store = opts.mode == Mode::Full;
  std::vector<std::int16_t> entries(store ? size * size : 0);
  const unsigned threads = resolve_threads(opts.threads);
  std::vector<Best> best(threads);
  parallel_for(size, threads, [&](std::size_t b, unsigned w) {
    std::vector<std::int32_t> column;
    walsh_column(t, static_cast<std::uint32_t>(b), column);
    for (std::size_t a = 0; a < size; ++a) {
      if (store) entries[a * size + b] = static_cast<std::int16_t>(column[a]);
      if (b != 0) best[w].offer(std::abs(column[a]), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  });
  for (std::size_t w = 1; w < best.size(); ++w) best[0].merge(best[w]);
  return make_result(SpectrumKind::Walsh, t.n(), opts, best[0], std::move(entries), 0);
}

namespace {

AnalysisOptions max_only(unsigned threads) {
  AnalysisOptions opts;
  opts.mode = Mode::MaxOnly;
  opts.threads = threads;
  opts.budget_log2 = 64;
  return opts;
}

}  // namespace

unsigned delta_uniformity(const SBoxTable& t, unsigned threads) {
  return static_cast<unsigned>(ddt(t, max_only(threads)).summary.value);
}

unsigned boomerang_uniformity(const SBoxTable& t, unsigned threads) {
  return static_cast<unsigned>(bct(t, max_only(threads)).summary.value);
}

unsigned boomerang_uniformity_lqsl(const SBoxTable& t, unsigned threads) {
  return static_cast<unsigned>(bct_lqsl_table(t, max_only(threads)).summary.value);
}

unsigned nonlinearity(const SBoxTable& t, unsigned threads) {
  const auto max_abs = walsh(t, max_only(threads)).summary.value;
  return static_cast<unsigned>((std::int64_t{1} << (t.n() - 1)) - max_abs / 2);
}

std::uint32_t AffineMap::apply(std::uint32_t x) const noexcept {
  std::uint64_t acc = shift;
  for (unsigned j = 0; j < n; ++j) {
    if ((x >> j) & 1u) acc ^= columns[j];
  }
  return static_cast<std::uint32_t>(acc);
}

AffineMap random_affine(unsigned n, Rng& rng) {
  AffineMap map;
  map.n = n;
  map.columns.resize(n);
  const std::uint64_t bound = std::uint64_t{1} << n;
  do {
    for (auto& c : map.columns) c = uniform_below(rng, bound);
  } while (Gf2LinearSolver(map.columns, n).rank() != n);
  map.shift = uniform_below(rng, bound);
  return map;
}

SBoxTable compose(const AffineMap& outer, const SBoxTable& t, const AffineMap& inner) {
  if (outer.n != t.n() || inner.n != t.n()) throw Error(Errc::InvalidParams, "affine map width mismatch");
  std::vector<std::uint32_t> out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) out[x] = outer.apply(t[inner.apply(static_cast<std::uint32_t>(x))]);
  return SBoxTable(t.n(), std::move(out));
}

}  // namespace bctkit
