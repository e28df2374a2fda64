#include <doctest.h>

#include "bctkit/baselines.hpp"
#include "bctkit/error.hpp"
#include "oracle.hpp"

using namespace bctkit;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::BadFormat;
}

}  // namespace

TEST_CASE("inverse family") {
  const Tower t(Field::create(3));
  const SBoxTable s = inverse_family(t);
  CHECK(s[0] == 0);
  for (std::uint64_t v = 1; v < t.order(); ++v) CHECK(t.mul(t.decode(v), t.decode(s[v])) == Tower::one());
  CHECK(is_permutation(s));
  CHECK(delta_uniformity(s) == 4);
  CHECK(boomerang_uniformity(s) == 4);
}

TEST_CASE("gold family") {
  CHECK(default_gold_exponent(6) == 2);
  CHECK(default_gold_exponent(10) == 2);
  const Tower t(Field::create(3));
  const SBoxTable s = gold_family(t, 2);
  for (std::uint64_t v = 0; v < t.order(); ++v) CHECK(t.decode(s[v]) == t.pow(t.decode(v), 5));
  CHECK(is_permutation(s));
  CHECK(boomerang_uniformity(s) == 4);
  CHECK(error_of([&] { gold_family(t, 1); }) == Errc::InvalidFamilyParams);
  CHECK(error_of([&] { gold_family(t, 3); }) == Errc::InvalidFamilyParams);
  CHECK(error_of([&] { gold_family(t, 6); }) == Errc::InvalidFamilyParams);
}

TEST_CASE("quadrinomial family") {
  for (unsigned m : {3u, 5u}) {
    const Tower t(Field::create(m));
    const auto gamma = find_quadrinomial_gamma(t);
    REQUIRE(gamma);
    CHECK(quadrinomial_gamma_valid(t, *gamma));
    // the order-3 condition, by direct powering
    const TowerEl g = t.pow(*gamma, t.base().order() - 1);
    CHECK(g != Tower::one());
    CHECK(t.pow(g, 3) == Tower::one());
    const SBoxTable s = quadrinomial_family(t, *gamma);
    CHECK(is_permutation(s));
    if (m == 3) CHECK(boomerang_uniformity(s) == 4);
    CHECK_FALSE(quadrinomial_gamma_valid(t, Tower::one()));
    CHECK(error_of([&] { quadrinomial_family(t, Tower::one()); }) == Errc::InvalidFamilyParams);
  }
}

TEST_CASE("family dispatch") {
  const Tower t(Field::create(3));
  CHECK(baseline_family(1, t) == inverse_family(t));
  CHECK(baseline_family(2, t) == gold_family(t, 2));
  CHECK(error_of([&] { baseline_family(3, t); }) == Errc::InvalidFamilyParams);
  BaselineParams p;
  p.gamma = find_quadrinomial_gamma(t);
  CHECK(baseline_family(3, t, p) == quadrinomial_family(t, *p.gamma));
  CHECK(error_of([&] { baseline_family(4, t); }) == Errc::InvalidFamilyParams);
}
