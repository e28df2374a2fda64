#include "bctkit/baselines.hpp"

#include <numeric>
#include <string>

#include "bctkit/error.hpp"

namespace bctkit {

namespace {

template <class Map>
SBoxTable tabulate(const Tower& t, Map&& map) {
  std::vector<std::uint32_t> values(t.order());
  for (std::uint64_t i = 0; i < t.order(); ++i) {
    values[i] = static_cast<std::uint32_t>(t.encode(map(t.decode(i))));
  }
  return SBoxTable(t.n(), std::move(values));
}

}  // namespace

SBoxTable inverse_family(const Tower& tower) {
  const std::uint64_t e = tower.order() - 2;
  return tabulate(tower, [&](TowerEl z) { return tower.pow(z, e); });
}

unsigned default_gold_exponent(unsigned n) {
  for (unsigned i = 1; i < n; ++i) {
    if (std::gcd(i, n) == 2) return i;
  }
  throw Error(Errc::InvalidFamilyParams, "no i with gcd(i, n) = 2 for n=" + std::to_string(n));
}

SBoxTable gold_family(const Tower& tower, unsigned i) {
  const unsigned n = tower.n();
  if (i < 1 || i >= n || std::gcd(i, n) != 2) {
    throw Error(Errc::InvalidFamilyParams,
                "need gcd(i, n) = 2 (i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
  }
  return tabulate(tower, [&](TowerEl z) { return tower.mul(z, tower.frob_pow(z, i)); });
}

bool quadrinomial_gamma_valid(const Tower& tower, TowerEl gamma) noexcept {
  if (gamma.is_zero()) return false;
  const TowerEl g = tower.pow(gamma, tower.base().order() - 1);
  return g != Tower::one() && tower.pow(g, 3) == Tower::one();
}

std::optional<TowerEl> find_quadrinomial_gamma(const Tower& tower) {
  for (std::uint64_t v = 1; v < tower.order(); ++v) {
    const TowerEl g = tower.decode(v);
    if (quadrinomial_gamma_valid(tower, g)) return g;
  }
  return std::nullopt;
}

SBoxTable quadrinomial_family(const Tower& tower, TowerEl gamma) {
  if (!quadrinomial_gamma_valid(tower, gamma)) {
    throw Error(Errc::InvalidFamilyParams, "gamma^(2^m - 1) must have order 3");
  }
  return tabulate(tower, [&](TowerEl z) {
    return tower.mul(Tower::bar(z), tower.sqr(z)) + tower.mul(gamma, z);
  });
}

SBoxTable baseline_family(int id, const Tower& tower, const BaselineParams& params) {
  switch (id) {
    case 1:
      return inverse_family(tower);
    case 2:
      return gold_family(tower, params.gold_exponent.value_or(default_gold_exponent(tower.n())));
    case 3:
      if (!params.gamma) throw Error(Errc::InvalidFamilyParams, "family 3 needs gamma");
      return quadrinomial_family(tower, *params.gamma);
    default:
      throw Error(Errc::InvalidFamilyParams, "unknown baseline family " + std::to_string(id));
  }
}

}  // namespace bctkit
