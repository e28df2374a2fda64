#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "bctkit/baselines.hpp"
#include "bctkit/butterfly.hpp"
#include "bctkit/error.hpp"
#include "bctkit/sbox.hpp"
#include "oracle.hpp"

using namespace bctkit;

namespace {

SBoxTable identity(unsigned n) {
  std::vector<std::uint32_t> v(std::size_t{1} << n);
  std::iota(v.begin(), v.end(), 0u);
  return SBoxTable(n, std::move(v));
}

std::vector<std::uint32_t> values_of(const SBoxTable& t) { return {t.values().begin(), t.values().end()}; }

SBoxTable random_permutation(unsigned n, Rng& rng) {
  std::vector<std::uint32_t> v(std::size_t{1} << n);
  std::iota(v.begin(), v.end(), 0u);
  for (std::size_t i = v.size() - 1; i > 0; --i) std::swap(v[i], v[uniform_below(rng, i + 1)]);
  return SBoxTable(n, std::move(v));
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::BadFormat;
}

}  // namespace

TEST_CASE("table construction") {
  CHECK(error_of([] { SBoxTable(2, {0, 1, 2}); }) == Errc::InvalidParams);
  CHECK(error_of([] { SBoxTable(2, {0, 1, 2, 4}); }) == Errc::InvalidParams);
  CHECK(is_permutation(identity(4)));
  CHECK_FALSE(is_permutation(SBoxTable(2, {0, 0, 1, 2})));
  CHECK(error_of([] { invert(SBoxTable(2, {0, 0, 1, 2})); }) == Errc::NotAPermutation);
  CHECK(error_of([] { parse_mode("fast"); }) == Errc::InvalidParams);
  CHECK(parse_mode("sampled") == Mode::Sampled);
}

TEST_CASE("entries against the naive oracle") {
  Rng rng(5);
  for (int rep = 0; rep < 3; ++rep) {
    const SBoxTable s = random_permutation(5, rng);
    const SBoxTable inv = invert(s);
    const auto f = values_of(s);
    const auto fi = oracle::inverse(f);
    CHECK(values_of(inv) == fi);
    const SpectrumTable d = ddt(s), b = bct(s), l = bct_lqsl_table(s), w = walsh(s);
    for (std::uint32_t a = 0; a < 32; ++a) {
      for (std::uint32_t c = 0; c < 32; ++c) {
        CHECK(d.at(a, c) == oracle::ddt(f, a, c));
        CHECK(b.at(a, c) == oracle::bct(f, fi, a, c));
        CHECK(bct_entry(s, inv, a, c) == static_cast<std::uint32_t>(oracle::bct(f, fi, a, c)));
        CHECK(w.at(a, c) == oracle::walsh(f, a, c));
        CHECK(d.at(a, c) % 2 == 0);
        CHECK(b.at(a, c) % 2 == 0);
        if (a != 0) CHECK(l.at(a, c) == b.at(a, c));
      }
    }
  }
}

TEST_CASE("structural identities") {
  Rng rng(6);
  const SBoxTable s = random_permutation(6, rng);
  const SpectrumTable d = ddt(s), b = bct(s), w = walsh(s);
  CHECK(d.at(0, 0) == 64);
  for (std::uint32_t c = 1; c < 64; ++c) CHECK(d.at(0, c) == 0);
  for (std::uint32_t a = 0; a < 64; ++a) {
    int row = 0;
    for (std::uint32_t c = 0; c < 64; ++c) row += d.at(a, c);
    CHECK(row == 64);
    CHECK(b.at(a, 0) == 64);
    CHECK(b.at(0, a) == 64);
    // boomerang entries dominate differential ones
    for (std::uint32_t c = 1; c < 64; ++c) {
      if (a != 0) CHECK(b.at(a, c) >= d.at(a, c));
    }
  }
  // Parseval over each output mask
  for (std::uint32_t c = 0; c < 64; ++c) {
    long sum = 0;
    for (std::uint32_t a = 0; a < 64; ++a) sum += long{w.at(a, c)} * w.at(a, c);
    CHECK(sum == 64 * 64);
  }
}

TEST_CASE("identity and constant maps") {
  const SBoxTable id = identity(4);
  CHECK(delta_uniformity(id) == 16);
  CHECK(boomerang_uniformity(id) == 16);
  CHECK(nonlinearity(id) == 0);
  const SBoxTable zero(4, std::vector<std::uint32_t>(16, 0));
  CHECK(delta_uniformity(zero) == 16);
  CHECK(error_of([&] { bct(zero); }) == Errc::NotAPermutation);
  CHECK(nonlinearity(zero) == 0);
}

TEST_CASE("inverse map") {
  const Tower t(Field::create(3));
  const SBoxTable inv = inverse_family(t);
  CHECK(delta_uniformity(inv) == 4);
  CHECK(boomerang_uniformity(inv) == 4);
  CHECK(boomerang_uniformity_lqsl(inv) == 4);
  CHECK(nonlinearity(inv) == 24);
}

TEST_CASE("invariance under affine equivalence and inversion") {
  Rng rng(9);
  const Tower t(Field::create(3));
  const SBoxTable s = Butterfly::from_theta(t, 1, 2).closed_table();
  const unsigned d0 = delta_uniformity(s), b0 = boomerang_uniformity(s), nl0 = nonlinearity(s);
  for (int i = 0; i < 10; ++i) {
    const AffineMap outer = random_affine(6, rng), inner = random_affine(6, rng);
    const SBoxTable e = compose(outer, s, inner);
    CHECK(is_permutation(e));
    CHECK(delta_uniformity(e) == d0);
    CHECK(boomerang_uniformity(e) == b0);
    CHECK(nonlinearity(e) == nl0);
  }
  const SBoxTable si = invert(s);
  CHECK(delta_uniformity(si) == d0);
  CHECK(boomerang_uniformity(si) == b0);
  CHECK(nonlinearity(si) == nl0);
}

TEST_CASE("affine maps have linear spectra") {
  Rng rng(10);
  const AffineMap a = random_affine(5, rng);
  std::vector<std::uint32_t> v(32);
  for (std::uint32_t x = 0; x < 32; ++x) v[x] = a.apply(x);
  const SBoxTable s(5, v);
  CHECK(is_permutation(s));
  CHECK(delta_uniformity(s) == 32);
  CHECK(nonlinearity(s) == 0);
  const SpectrumTable w = walsh(s);
  for (std::uint32_t c = 1; c < 32; ++c) {
    int nonzero = 0;
    for (std::uint32_t x = 0; x < 32; ++x) nonzero += w.at(x, c) != 0;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("max-only and sampled modes") {
  Rng rng(11);
  const SBoxTable s = random_permutation(8, rng);
  AnalysisOptions full;
  AnalysisOptions max_only;
  max_only.mode = Mode::MaxOnly;
  CHECK(ddt(s, max_only).summary.value == ddt(s, full).summary.value);
  CHECK(bct(s, max_only).summary.value == bct(s, full).summary.value);
  CHECK_FALSE(bct(s, max_only).has_entries());

  AnalysisOptions sampled;
  sampled.mode = Mode::Sampled;
  sampled.samples = 500;
  sampled.seed = 42;
  const SpectrumSummary s1 = bct(s, sampled).summary;
  sampled.threads = 1;
  const SpectrumSummary s2 = bct(s, sampled).summary;
  CHECK(s1.value == s2.value);
  CHECK(s1.argmax_a == s2.argmax_a);
  CHECK(s1.argmax_b == s2.argmax_b);
  CHECK(s1.samples == 500);
  CHECK(s1.value <= bct(s, full).summary.value);
  CHECK(s1.argmax_a != 0);
  CHECK(s1.argmax_b != 0);
}

TEST_CASE("scale refusal") {
  const Tower t(Field::create(7));
  const SBoxTable s = inverse_family(t);
  CHECK(error_of([&] { bct(s); }) == Errc::ScaleRefusal);
  AnalysisOptions tight;
  tight.mode = Mode::MaxOnly;
  tight.budget_log2 = 20;
  CHECK(error_of([&] { ddt(s, tight); }) == Errc::ScaleRefusal);
  AnalysisOptions sampled;
  sampled.mode = Mode::Sampled;
  sampled.samples = 100;
  CHECK(bct(s, sampled).summary.value <= 4);
}

TEST_CASE("butterfly nonlinearity at n = 6") {
  const Tower t(Field::create(3));
  for (Elem th = 2; th < 8; ++th) {
    const SBoxTable s = Butterfly::from_theta(t, 1, th).univariate_table();
    const auto f = values_of(s);
    int max_abs = 0;
    for (std::uint32_t c = 1; c < 64; ++c) {
      for (std::uint32_t a = 0; a < 64; ++a) max_abs = std::max(max_abs, std::abs(oracle::walsh(f, a, c)));
    }
    CHECK(max_abs == 16);
    CHECK(nonlinearity(s) == 32 - 8);
  }
}
