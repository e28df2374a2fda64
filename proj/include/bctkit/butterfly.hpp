#pragma once

#include <array>
#include <optional>
#include <utility>

#include "bctkit/gf2m.hpp"
#include "bctkit/sbox.hpp"
#include "bctkit/tower.hpp"

namespace bctkit {

/// Returns k when odd, else m - k. Throws NotCoprime unless 1 <= k < m and gcd(k, m) = 1.
unsigned normalize_k(unsigned m, unsigned k);

/// (alpha, beta) = (1/(1+t+t^2), t^2/(1+t+t^2)).
/// Throws InvalidParams for t = 0 and ThetaYieldsTrivialPair for t = 1.
std::pair<Elem, Elem> theta_to_alpha_beta(const Field& field, Elem theta);

/// alpha^2 + beta^2 + alpha*beta + 1 == 0
bool pair_condition_holds(const Field& field, Elem alpha, Elem beta) noexcept;

struct ButterflyParams {
  Tower tower;
  unsigned k = 1;      // exponent as given; used for R, V_R and H_R
  unsigned k_odd = 1;  // normalize_k(m, k); used for the univariate form
  Elem alpha = 0;
  Elem beta = 0;
  std::optional<Elem> theta;
  bool condition_holds = false;
};

/// Quadrinomial coefficients. e is read off the bivariate form; c comes from
/// the theta formulas when theta is known, and c_scaled = e * alpha^-(2^k+1).
struct CoeffSet {
  std::array<Elem, 4> e{};
  std::array<Elem, 4> c{};
  std::array<Elem, 4> c_scaled{};

  bool consistent() const noexcept { return c == c_scaled; }
};

/// Generalized butterfly built from R(x, y) = (x + alpha y)^(2^k+1) + (beta y)^(2^k+1)
/// over GF(2^m), m odd, together with its univariate form
/// F(z) = c1 z^(2^k+1) + c2 zb^(2^k+1) + c3 z^(2^k) zb + c4 z zb^(2^k), zb = bar(z).
class Butterfly {
 public:
  static Butterfly from_theta(const Tower& tower, unsigned k, Elem theta);
  /// Raw pair; the pair condition may fail (stored in params().condition_holds).
  static Butterfly from_alpha_beta(const Tower& tower, unsigned k, Elem alpha, Elem beta);

  const ButterflyParams& params() const noexcept { return params_; }
  const Tower& tower() const noexcept { return params_.tower; }
  const Field& field() const noexcept { return params_.tower.base(); }
  const CoeffSet& coeffs() const noexcept { return coeffs_; }

  Elem R(Elem x, Elem y) const noexcept;
  /// The x' with R(x', y) = x.
  Elem R_inverse(Elem x, Elem y) const noexcept;

  /// V_R(x, y) = (R(x, y), R(y, x)); input and output as x + w*y.
  TowerEl closed(TowerEl in) const noexcept;
  /// H_R(x, y) = (R(y, R_y^-1(x)), R_y^-1(x)).
  TowerEl open(TowerEl in) const noexcept;
  /// Univariate quadrinomial with the c coefficients.
  TowerEl F(TowerEl z) const noexcept;
  /// Same quadrinomial with the e coefficients.
  TowerEl G(TowerEl z) const noexcept;

  SBoxTable closed_table() const;
  SBoxTable open_table() const;
  SBoxTable univariate_table() const;

 private:
  Butterfly(ButterflyParams params);
  TowerEl quadrinomial(const std::array<Elem, 4>& coef, TowerEl z) const noexcept;
  template <class Map>
  SBoxTable tabulate(Map&& map) const;

  ButterflyParams params_;
  CoeffSet coeffs_;
  std::uint64_t root_exponent_;  // (2^k + 1)^-1 mod (2^m - 1)
};

}  // namespace bctkit
