#include "bctkit/diagnostics.hpp"

#include <algorithm>

#include "bctkit/error.hpp"

namespace bctkit {

namespace {

Elem require_theta(const Butterfly& b) {
  if (!b.params().theta) {
    throw Error(Errc::InvalidParams, "diagnostics need a theta-built butterfly");
  }
  return *b.params().theta;
}

void sort_by_encoding(const Tower& t, std::vector<TowerEl>& v) {
  std::sort(v.begin(), v.end(), [&](TowerEl p, TowerEl q) { return t.encode(p) < t.encode(q); });
}

}  // namespace

Diagnostics::Diagnostics(const Butterfly& butterfly)
    : butterfly_(butterfly),
      solver_(butterfly.tower(), butterfly.params().k_odd),
      theta_(require_theta(butterfly)),
      theta_sq_inv_(butterfly.field().inv(butterfly.field().sqr(theta_))) {}

DiffCoeffs Diagnostics::diff_coeffs(TowerEl a, TowerEl b) const {
  if (a.is_zero()) throw Error(Errc::ZeroDirection, "direction a must be nonzero");
  const Tower& t = tower();
  const auto& c = butterfly_.coeffs().c;
  const unsigned k = butterfly_.params().k_odd;

  const TowerEl ab = Tower::bar(a);
  const TowerEl ak = t.frob_pow(a, k);
  const TowerEl abk = Tower::bar(ak);
  const TowerEl a_gold = t.mul(a, ak);       // a^(2^k+1)
  const TowerEl ab_gold = Tower::bar(a_gold);
  const TowerEl ak_ab = t.mul(ak, ab);       // a^(2^k) bar(a)
  const TowerEl a_abk = t.mul(a, abk);       // a bar(a)^(2^k)

  DiffCoeffs dc;
  auto& tau = dc.tau;
  tau[0] = t.scale(c[1], ab_gold) + t.scale(c[3], a_abk);
  tau[1] = t.scale(c[0], a_gold) + t.scale(c[2], ak_ab);
  tau[2] = t.scale(c[1], ab_gold) + t.scale(c[2], ak_ab);
  tau[3] = t.scale(c[0], a_gold) + t.scale(c[3], a_abk);
  tau[4] = butterfly_.F(a) + b;

  const TowerEl t2b = Tower::bar(tau[1]);
  auto& v = dc.v;
  v[0] = t.mul(tau[0], Tower::bar(tau[0])) + t.mul(tau[1], t2b);
  v[1] = t.mul(tau[0], Tower::bar(tau[3])) + t.mul(t2b, tau[2]);
  v[2] = t.mul(tau[0], Tower::bar(tau[2])) + t.mul(t2b, tau[3]);
  v[3] = t.mul(tau[0], Tower::bar(tau[4])) + t.mul(t2b, tau[4]);
  return dc;
}

DiffProperties Diagnostics::check_properties(const DiffCoeffs& dc, TowerEl b) const {
  const Tower& t = tower();
  const auto& tau = dc.tau;
  const auto& v = dc.v;
  DiffProperties p;
  p.v_sum_zero = (v[0] + v[1] + v[2]).is_zero();
  p.tau_sums = (tau[0] + tau[1]) == (tau[2] + tau[3]) && (tau[0] + tau[1]) == (tau[4] + b);
  p.v4_relation = v[3] == v[0] + t.mul(tau[0], Tower::bar(b)) + t.mul(Tower::bar(tau[1]), b);
  const TowerEl r1 = t.mul(tau[0], Tower::bar(v[2])) + t.mul(tau[1], v[1]) + t.mul(tau[2], v[0]);
  const TowerEl r2 = t.mul(tau[0], Tower::bar(v[1])) + t.mul(tau[1], v[2]) + t.mul(tau[3], v[0]);
  const TowerEl r3 = t.mul(tau[0], Tower::bar(v[3])) + t.mul(tau[1], v[3]) + t.mul(tau[4], v[0]);
  p.bilinear = r1.is_zero() && r2.is_zero() && r3.is_zero();
  p.v1_nonzero = !v[0].is_zero();
  return p;
}

TowerEl Diagnostics::eval_tau_equation(const DiffCoeffs& dc, TowerEl x) const noexcept {
  const Tower& t = tower();
  const TowerEl xk = t.frob_pow(x, butterfly_.params().k_odd);
  const TowerEl xb = Tower::bar(x);
  return t.mul(dc.tau[0], Tower::bar(xk)) + t.mul(dc.tau[1], xk) + t.mul(dc.tau[2], xb) +
         t.mul(dc.tau[3], x) + dc.tau[4];
}

std::pair<TowerEl, TowerEl> Diagnostics::reduced(const DiffCoeffs& dc) const {
  if (dc.v[0].is_zero()) throw Error(Errc::InvalidInstance, "v1 = 0; the equation cannot be normalised");
  const Tower& t = tower();
  const TowerEl inv_v1 = t.inv(dc.v[0]);
  const TowerEl mu = t.mul(dc.v[1], inv_v1);
  // (tau1 bar(b) + bar(tau2) b) / v1 + 1 equals v4 / v1 by the v4 relation
  const TowerEl nu = t.mul(dc.v[3], inv_v1);
  return {mu, nu};
}

TowerEl Diagnostics::mu_closed(TowerEl gamma) const {
  const Tower& t = tower();
  const Field& f = butterfly_.field();
  const unsigned k = butterfly_.params().k_odd;
  const Elem th = theta_;
  const Elem t2 = f.sqr(th);
  const Elem t2k = f.frob_pow(t2, k);
  const Elem tk = f.frob_pow(th, k);
  const Elem th1 = th ^ 1u;
  const Elem gold = f.mul(th1, f.frob_pow(th1, k)) ^ 1u;  // (theta+1)^(2^k+1) + 1

  const TowerEl num = t.scale(f.mul(t2, 1u ^ tk), t.frob_pow(gamma, k)) +
                      t.scale(f.mul(t2k, th1), gamma) + Tower::embed(f.sqr(gold));
  const Elem den = f.mul(t2k, f.mul(th1, Tower::trace_rel(gamma)) ^ t2);
  return t.scale(f.inv(den), num);
}

Elem Diagnostics::xi_closed(TowerEl gamma) const {
  const Field& f = butterfly_.field();
  const Elem th = theta_;
  return f.mul(f.mul(th ^ 1u, Tower::trace_rel(gamma)) ^ f.sqr(th), theta_sq_inv_);
}

TowerEl Diagnostics::lambda_closed(TowerEl gamma) const {
  const Field& f = butterfly_.field();
  return tower().scale(f.mul(1u ^ theta_, theta_sq_inv_), gamma) + TowerEl{theta_sq_inv_, 1u};
}

MuXiLambda Diagnostics::mu_xi_lambda(TowerEl a) const {
  const Tower& t = tower();
  const DiffCoeffs dc = diff_coeffs(a, Tower::zero());
  MuXiLambda r;
  r.gamma = t.div(Tower::bar(a), a);
  r.mu = mu_closed(r.gamma);
  r.mu_from_v = reduced(dc).first;
  r.xi = xi_closed(r.gamma);
  r.lambda = lambda_closed(r.gamma);
  return r;
}

std::vector<TowerEl> Diagnostics::solve_difference(TowerEl a, TowerEl b) const {
  const auto [mu, nu] = reduced(diff_coeffs(a, b));
  std::vector<TowerEl> roots = solver_.solve(mu, nu);
  for (auto& x : roots) x = tower().mul(a, x);
  sort_by_encoding(tower(), roots);
  return roots;
}

std::vector<TowerEl> Diagnostics::kernel_H(TowerEl a) const {
  return solve_difference(a, butterfly_.F(a));
}

std::vector<TowerEl> Diagnostics::kernel_closed_form(TowerEl a) const {
  const TowerEl e = eta(a);
  std::vector<TowerEl> out{Tower::zero(), a, e, a + e};
  sort_by_encoding(tower(), out);
  return out;
}

TowerEl Diagnostics::phi(TowerEl z) const noexcept {
  const Tower& t = tower();
  const Field& f = butterfly_.field();
  return t.scale(f.mul(1u ^ theta_, theta_sq_inv_), Tower::bar(z)) + t.mul(TowerEl{theta_sq_inv_, 1u}, z);
}

Elem Diagnostics::E(TowerEl z) const noexcept {
  const Field& f = butterfly_.field();
  // z^2 + bar(z)^2 = (z + bar(z))^2 = y^2
  return f.mul(theta_ ^ 1u, f.sqr(z.y)) ^ f.mul(f.sqr(theta_), tower().norm(z));
}

TowerEl Diagnostics::H(TowerEl z) const noexcept {
  const Tower& t = tower();
  const auto& c = butterfly_.coeffs().c;
  const unsigned k = butterfly_.params().k_odd;
  const TowerEl zb = Tower::bar(z);
  const TowerEl pk = t.frob_pow(phi(z), k);
  return t.mul(Tower::bar(pk), t.scale(c[1], zb) + t.scale(c[3], z)) +
         t.mul(pk, t.scale(c[0], z) + t.scale(c[2], zb));
}

TowerEl Diagnostics::nu_closed(TowerEl z, TowerEl b) const {
  const Tower& t = tower();
  const Field& f = butterfly_.field();
  const auto& c = butterfly_.coeffs().c;
  const unsigned k = butterfly_.params().k_odd;
  const Elem th = theta_;
  const TowerEl zb = Tower::bar(z);
  const TowerEl num = t.mul(t.scale(c[0], zb) + t.scale(c[2], z), b) +
                      t.mul(t.scale(c[1], zb) + t.scale(c[3], z), Tower::bar(b));
  const Elem s = 1u ^ th ^ f.frob_pow(th, k);
  const Elem den = f.mul(f.mul(f.frob_pow(f.sqr(th), k), f.sqr(s)), E(z));
  if (den == 0) throw Error(Errc::InvalidInstance, "vanishing denominator in nu_z");
  const TowerEl zk = t.frob_pow(z, k);
  return Tower::one() + t.div(t.scale(f.inv(den), num), zk);
}

Elem Diagnostics::trace_denominator(TowerEl z) const {
  const Field& f = butterfly_.field();
  const unsigned k = butterfly_.params().k_odd;
  const Elem s = 1u ^ theta_ ^ f.frob_pow(theta_, k);
  const Elem e = E(z);
  return f.mul(f.sqr(s), f.mul(e, f.frob_pow(e, k)));
}

BoomerangReport Diagnostics::boomerang_traces(TowerEl a, TowerEl b) const {
  if (a.is_zero()) throw Error(Errc::ZeroDirection, "direction a must be nonzero");
  if (b.is_zero()) throw Error(Errc::ZeroB, "b must be nonzero");
  const Tower& t = tower();
  const Field& f = butterfly_.field();
  const unsigned k = butterfly_.params().k_odd;

  BoomerangReport rep;
  rep.a = a;
  rep.b = b;
  const TowerEl e = eta(a);
  const std::array<TowerEl, 3> zs{a, e, a + e};
  const TowerEl bb = Tower::bar(b);
  rep.all_delta_zero = true;
  rep.all_second_one = true;

  for (std::size_t i = 0; i < zs.size(); ++i) {
    ZReport& r = rep.per_z[i];
    r.z = zs[i];
    if (r.z.is_zero()) throw Error(Errc::InvalidInstance, "Z_a contains 0");
    const TowerEl gamma = t.div(Tower::bar(r.z), r.z);
    r.mu = mu_closed(gamma);
    r.nu = nu_closed(r.z, b);
    std::tie(r.mu_from_v, r.nu_from_v) = reduced(diff_coeffs(r.z, b));
    r.xi = xi_closed(gamma);
    if (r.xi == 0) throw Error(Errc::InvalidInstance, "xi_z = 0");
    r.lambda = lambda_closed(gamma);
    const Elem xik_inv = f.inv(f.frob_pow(r.xi, k));
    r.delta = f.mul(Tower::trace_rel(r.nu), xik_inv);
    r.E = E(r.z);
    r.H = H(r.z);
    r.Fz = butterfly_.F(r.z);

    const Elem den_inv = f.inv(trace_denominator(r.z));
    r.delta_trace = f.trace(r.delta);
    r.delta_trace_closed = t.trace(t.scale(den_inv, t.mul(r.Fz, bb)));
    const TowerEl lk = t.frob_pow(r.lambda, k);
    r.second_trace = t.trace(t.scale(xik_inv, t.mul(lk, Tower::bar(r.nu))));
    r.second_trace_closed = t.trace(t.scale(den_inv, t.mul(r.H, bb))) ^ 1u;
    r.predicted_roots = (r.delta_trace == 0 && r.second_trace == 0) ? 4 : 0;
    r.classified_roots = solver_.classify(r.mu_from_v, r.nu_from_v).count;

    rep.delta_trace_sum ^= r.delta_trace;
    rep.all_delta_zero = rep.all_delta_zero && r.delta_trace == 0;
    rep.all_second_one = rep.all_second_one && r.second_trace == 1;
    rep.predicted_count += r.predicted_roots;
  }
  return rep;
}

}  // namespace bctkit
