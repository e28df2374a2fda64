#include "bctkit/solvers.hpp"

namespace bctkit {

namespace {

unsigned checked_k(const Tower& tower, unsigned k) {
  if (k == 0 || k % 2 == 0) {
    throw Error(Errc::InvalidInstance, "k must be odd, got " + std::to_string(k));
  }
  if (std::gcd(k, tower.m()) != 1) {
    throw Error(Errc::NotCoprime, "gcd(k, m) must be 1");
  }
  return k;
}

}  // namespace

const char* branch_name(LBranch branch) noexcept {
  switch (branch) {
    case LBranch::None: return "none";
    case LBranch::Case1i: return "case-1(i)";
    case LBranch::Case1ii: return "case-1(ii)";
    case LBranch::Case2: return "case-2";
  }
  return "none";
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % mod), r = static_cast<std::int64_t>(mod);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw Error(Errc::NotCoprime, "no modular inverse");
  const auto m = static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

LSolver::LSolver(const Tower& tower, unsigned k)
    : tower_(tower),
      k_(checked_k(tower, k)),
      xi_exponent_(inverse_mod((std::uint64_t{1} << (k % tower.m())) - 1, tower.base().order() - 1)),
      base_as_(tower.base(), k),
      tower_as_(tower, k) {}

TowerEl LSolver::eval(TowerEl mu, TowerEl nu, TowerEl x) const noexcept {
  const TowerEl mu1 = mu + Tower::one();
  return tower_.frob_pow(x, k_) + tower_.mul(mu, Tower::bar(x)) + tower_.mul(mu1, x) + nu;
}

Elem LSolver::xi_of(TowerEl mu) const noexcept {
  const Elem s = 1u ^ Tower::trace_rel(mu);
  return s == 0 ? 0 : tower_.base().pow(s, xi_exponent_);
}

std::vector<TowerEl> LSolver::lambda_candidates(TowerEl mu, Elem xi) const {
  // Tr_1^n(mu*xi) = Tr_1^m(xi + xi^(2^k)) = 0, so a solution always exists.
  auto roots = tower_as_.solve(tower_.scale(xi, mu));
  if (roots.size() != 2) {
    throw Error(Errc::InvalidInstance, "lambda equation unexpectedly unsolvable");
  }
  return roots;
}

TowerEl LSolver::frobenius_orbit_sum(TowerEl w) const noexcept {
  TowerEl acc = Tower::zero();
  for (unsigned i = 0; i < tower_.m(); ++i) {
    acc += w;
    w = tower_.frob_pow(w, k_);
  }
  return acc;
}

LClassification LSolver::classify(TowerEl mu, TowerEl nu) const {
  const Elem xi = xi_of(mu);
  return classify_with_lambda(mu, nu, lambda_candidates(mu, xi).front());
}

LClassification LSolver::classify_with_lambda(TowerEl mu, TowerEl nu, TowerEl lambda) const {
  const Field& base = tower_.base();
  LClassification out;
  out.xi = xi_of(mu);
  out.lambda = lambda;
  const Elem nu_rel = Tower::trace_rel(nu);  // nu + bar(nu)

  if (out.xi == 0) {
    // 1 + mu + bar(mu) = 0: z is forced and the compatibility sum decides.
    const TowerEl w = tower_.mul(tower_.frob_pow(mu, k_), Tower::embed(nu_rel)) + tower_.frob_pow(nu, k_);
    if (frobenius_orbit_sum(w) == Tower::embed(nu_rel)) {
      out.count = 2;
      out.branch = LBranch::Case1i;
    }
    return out;
  }

  const Elem xi_k = base.frob_pow(out.xi, k_);
  out.delta = base.div(nu_rel, xi_k);
  if (base.trace(out.delta) != 0) return out;

  const Elem lambda_rel = Tower::trace_rel(lambda);
  if (lambda_rel == (out.xi ^ 1u)) {
    out.count = 2;
    out.branch = LBranch::Case1ii;
  } else if (lambda_rel == out.xi) {
    const TowerEl t = tower_.scale(base.inv(xi_k), tower_.mul(tower_.frob_pow(lambda, k_), Tower::bar(nu)));
    if (tower_.trace(t) == 0) {
      out.count = 4;
      out.branch = LBranch::Case2;
    }
  }
  return out;
}

std::vector<TowerEl> LSolver::solve(TowerEl mu, TowerEl nu) const {
  const Field& base = tower_.base();
  const Elem nu_rel = Tower::trace_rel(nu);
  const Elem xi = xi_of(mu);

  std::vector<Elem> zs;
  if (xi == 0) {
    // z^(2^k) = nu + bar(nu) has the unique root (nu + bar(nu))^(2^(m-k)).
    zs.push_back(base.frob_pow(nu_rel, tower_.m() - k_ % tower_.m()));
  } else {
    const Elem delta = base.div(nu_rel, base.frob_pow(xi, k_));
    for (Elem rho : base_as_.solve(delta)) zs.push_back(base.mul(xi, rho));
  }

  std::vector<TowerEl> roots;
  for (Elem z : zs) {
    const TowerEl w = tower_.mul(mu, Tower::embed(z)) + nu;
    if (!(frobenius_orbit_sum(w) + Tower::embed(z)).is_zero()) continue;
    for (TowerEl x : tower_as_.solve(w)) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end(),
            [&](TowerEl a, TowerEl b) { return tower_.encode(a) < tower_.encode(b); });
  return roots;
}

LClassification classify_L(const LInstance& inst) {
  return LSolver(inst.tower, inst.k).classify(inst.mu, inst.nu);
}

std::vector<TowerEl> solve_L(const LInstance& inst) {
  return LSolver(inst.tower, inst.k).solve(inst.mu, inst.nu);
}

}  // namespace bctkit
