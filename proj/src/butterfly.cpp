#include "bctkit/butterfly.hpp"

#include <numeric>

#include "bctkit/error.hpp"
#include "bctkit/solvers.hpp"

namespace bctkit {

namespace {

// x^(2^k + 1)
Elem gold(const Field& f, Elem x, unsigned k) noexcept { return f.mul(x, f.frob_pow(x, k)); }

void check_pair(Elem alpha, Elem beta) {
  if (alpha <= 1 || beta <= 1) {
    throw Error(Errc::InvalidParams, "alpha and beta must lie outside GF(2)");
  }
}

}  // namespace

unsigned normalize_k(unsigned m, unsigned k) {
  if (k < 1 || k >= m || std::gcd(k, m) != 1) {
    throw Error(Errc::NotCoprime, "need 1 <= k < m with gcd(k, m) = 1 (k=" + std::to_string(k) +
                                      ", m=" + std::to_string(m) + ")");
  }
  return k % 2 == 1 ? k : m - k;
}

std::pair<Elem, Elem> theta_to_alpha_beta(const Field& field, Elem theta) {
  if (theta == 0) throw Error(Errc::InvalidParams, "theta must be nonzero");
  if (theta == 1) throw Error(Errc::ThetaYieldsTrivialPair, "theta = 1 gives alpha = beta = 1");
  const Elem t2 = field.sqr(theta);
  const Elem s = 1u ^ theta ^ t2;  // never zero for odd m
  const Elem alpha = field.inv(s);
  const Elem beta = field.mul(t2, alpha);
  check_pair(alpha, beta);
  return {alpha, beta};
}

bool pair_condition_holds(const Field& f, Elem alpha, Elem beta) noexcept {
  return (f.sqr(alpha) ^ f.sqr(beta) ^ f.mul(alpha, beta) ^ 1u) == 0;
}

Butterfly Butterfly::from_theta(const Tower& tower, unsigned k, Elem theta) {
  const auto [alpha, beta] = theta_to_alpha_beta(tower.base(), theta);
  ButterflyParams p{tower, k, normalize_k(tower.m(), k), alpha, beta, theta, false};
  p.condition_holds = pair_condition_holds(tower.base(), alpha, beta);
  return Butterfly(std::move(p));
}

Butterfly Butterfly::from_alpha_beta(const Tower& tower, unsigned k, Elem alpha, Elem beta) {
  if (!tower.base().contains(alpha) || !tower.base().contains(beta)) {
    throw Error(Errc::InvalidParams, "alpha/beta out of field range");
  }
  check_pair(alpha, beta);
  ButterflyParams p{tower, k, normalize_k(tower.m(), k), alpha, beta, std::nullopt, false};
  p.condition_holds = pair_condition_holds(tower.base(), alpha, beta);
  return Butterfly(std::move(p));
}

Butterfly::Butterfly(ButterflyParams params)
    : params_(std::move(params)),
      root_exponent_(inverse_mod((std::uint64_t{1} << (params_.k % params_.tower.m())) + 1,
                                 params_.tower.base().order() - 1)) {
  const Field& f = field();
  const unsigned k = params_.k_odd;
  const Elem a = params_.alpha;
  const Elem ak = f.frob_pow(a, k);
  const Elem a_gold = gold(f, a, k);
  const Elem b_gold = gold(f, params_.beta, k);

  auto& e = coeffs_.e;
  e[0] = 1u ^ a ^ a_gold ^ b_gold;
  e[1] = 1u ^ ak ^ a_gold ^ b_gold;
  e[2] = 1u ^ a ^ ak;
  e[3] = a ^ ak ^ a_gold ^ b_gold;

  const Elem scale = f.inv(a_gold);
  for (std::size_t i = 0; i < 4; ++i) coeffs_.c_scaled[i] = f.mul(e[i], scale);

  if (params_.theta) {
    const Elem t = *params_.theta;
    const Elem t2 = f.sqr(t);
    const Elem s = 1u ^ t ^ t2;
    const Elem p_gold = gold(f, t ^ t2, k);
    const Elem q_gold = gold(f, t2, k);
    auto& c = coeffs_.c;
    c[0] = s ^ p_gold ^ q_gold;
    c[1] = f.frob_pow(s, k) ^ p_gold ^ q_gold;
    c[2] = 1u ^ p_gold;
    c[3] = gold(f, s, k) ^ p_gold ^ q_gold;
  } else {
    coeffs_.c = coeffs_.c_scaled;
  }
}

Elem Butterfly::R(Elem x, Elem y) const noexcept {
  const Field& f = field();
  return gold(f, x ^ f.mul(params_.alpha, y), params_.k) ^ gold(f, f.mul(params_.beta, y), params_.k);
}

Elem Butterfly::R_inverse(Elem x, Elem y) const noexcept {
  const Field& f = field();
  const Elem shifted = x ^ gold(f, f.mul(params_.beta, y), params_.k);
  return f.pow(shifted, root_exponent_) ^ f.mul(params_.alpha, y);
}

TowerEl Butterfly::closed(TowerEl in) const noexcept { return {R(in.x, in.y), R(in.y, in.x)}; }

TowerEl Butterfly::open(TowerEl in) const noexcept {
  const Elem w = R_inverse(in.x, in.y);
  return {R(in.y, w), w};
}

TowerEl Butterfly::quadrinomial(const std::array<Elem, 4>& coef, TowerEl z) const noexcept {
  const Tower& t = tower();
  const TowerEl zb = Tower::bar(z);
  const TowerEl zk = t.frob_pow(z, params_.k_odd);
  const TowerEl zbk = Tower::bar(zk);
  // z^(2^k) (c1 z + c3 zb) + zb^(2^k) (c2 zb + c4 z)
  return t.mul(zk, t.scale(coef[0], z) + t.scale(coef[2], zb)) +
         t.mul(zbk, t.scale(coef[1], zb) + t.scale(coef[3], z));
}

TowerEl Butterfly::F(TowerEl z) const noexcept { return quadrinomial(coeffs_.c, z); }

TowerEl Butterfly::G(TowerEl z) const noexcept { return quadrinomial(coeffs_.e, z); }

template <class Map>
SBoxTable Butterfly::tabulate(Map&& map) const {
  const Tower& t = tower();
  std::vector<std::uint32_t> values(t.order());
  for (std::uint64_t i = 0; i < t.order(); ++i) {
    values[i] = static_cast<std::uint32_t>(t.encode(map(t.decode(i))));
  }
  return SBoxTable(t.n(), std::move(values));
}

SBoxTable Butterfly::closed_table() const {
  return tabulate([this](TowerEl z) { return closed(z); });
}

SBoxTable Butterfly::open_table() const {
  return tabulate([this](TowerEl z) { return open(z); });
}

SBoxTable Butterfly::univariate_table() const {
  return tabulate([this](TowerEl z) { return F(z); });
}

}  // namespace bctkit
