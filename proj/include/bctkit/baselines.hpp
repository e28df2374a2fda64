#pragma once

#include <optional>

#include "bctkit/sbox.hpp"
#include "bctkit/tower.hpp"

namespace bctkit {

// Known permutations of GF(2^n), n = 2m with m odd, that have boomerang
// uniformity 4. Tables use the tower encoding x + 2^m y.

/// x^(2^n - 2).
SBoxTable inverse_family(const Tower& tower);

/// Smallest i in [1, n) with gcd(i, n) = 2.
unsigned default_gold_exponent(unsigned n);
/// x^(2^i + 1); throws InvalidFamilyParams unless 1 <= i < n and gcd(i, n) = 2.
SBoxTable gold_family(const Tower& tower, unsigned i);

/// True when gamma^(2^m - 1) has multiplicative order 3.
bool quadrinomial_gamma_valid(const Tower& tower, TowerEl gamma) noexcept;
/// Smallest valid gamma by encoding.
std::optional<TowerEl> find_quadrinomial_gamma(const Tower& tower);
/// x^(2^m + 2) + gamma x = bar(x) x^2 + gamma x; throws InvalidFamilyParams for invalid gamma.
SBoxTable quadrinomial_family(const Tower& tower, TowerEl gamma);

struct BaselineParams {
  std::optional<unsigned> gold_exponent;
  std::optional<TowerEl> gamma;
};

/// Family 1, 2 or 3; throws InvalidFamilyParams on unknown ids or missing parameters.
SBoxTable baseline_family(int id, const Tower& tower, const BaselineParams& params = {});

}  // namespace bctkit
