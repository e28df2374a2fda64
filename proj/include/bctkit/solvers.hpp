#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "bctkit/error.hpp"
#include "bctkit/gf2_linear.hpp"
#include "bctkit/gf2m.hpp"
#include "bctkit/tower.hpp"

namespace bctkit {

/// Roots of x^(2^k) + x = a over a binary field (GF(2^m) or the tower).
///
/// With gcd(k, degree) = 1 the map is GF(2)-linear with kernel {0, 1}, so
/// there are 0 or 2 roots; 2 exactly when the absolute trace of a is 0.
/// The bit-matrix of the map is reduced once at construction.
template <class Domain>
class ArtinSchreierSolver {
 public:
  using value_type = typename Domain::value_type;

  ArtinSchreierSolver(const Domain& domain, unsigned k) : domain_(domain), k_(k) {
    const unsigned d = domain_.degree();
    if (k == 0 || std::gcd(k, d) != 1) {
      throw Error(Errc::NotCoprime, "k=" + std::to_string(k) + " is not coprime to degree " +
                                        std::to_string(d));
    }
    std::vector<std::uint64_t> columns(d);
    for (unsigned j = 0; j < d; ++j) {
      const value_type e = domain_.from_bits(std::uint64_t{1} << j);
      columns[j] = domain_.to_bits(Domain::add(domain_.frob_pow(e, k_), e));
    }
    linear_ = std::make_shared<const Gf2LinearSolver>(columns, d);
  }

  unsigned k() const noexcept { return k_; }
  const Domain& domain() const noexcept { return domain_; }

  /// Sorted by canonical encoding; empty or {x, x + 1}.
  std::vector<value_type> solve(value_type a) const {
    const auto x = linear_->solve(domain_.to_bits(a));
    if (!x) return {};
    std::uint64_t r0 = *x;
    std::uint64_t r1 = *x ^ domain_.to_bits(Domain::one());
    if (r1 < r0) std::swap(r0, r1);
    return {domain_.from_bits(r0), domain_.from_bits(r1)};
  }

 private:
  Domain domain_;
  unsigned k_;
  std::shared_ptr<const Gf2LinearSolver> linear_;
};

/// Roots of x^2 + a x + b; throws ZeroLinearCoefficient when a = 0.
/// Two roots (differing by a) iff Tr(b / a^2) = 0, otherwise none.
template <class Domain>
std::vector<typename Domain::value_type> solve_quadratic(const Domain& domain,
                                                         typename Domain::value_type a,
                                                         typename Domain::value_type b) {
  if (domain.to_bits(a) == 0) {
    throw Error(Errc::ZeroLinearCoefficient, "x^2 + b has a unique square root; not handled here");
  }
  // x = a t turns the equation into t^2 + t = b / a^2.
  const auto c = domain.div(b, domain.sqr(a));
  ArtinSchreierSolver<Domain> as(domain, 1);
  auto roots = as.solve(c);
  for (auto& t : roots) t = domain.mul(a, t);
  std::sort(roots.begin(), roots.end(), [&](const auto& u, const auto& v) {
    return domain.to_bits(u) < domain.to_bits(v);
  });
  return roots;
}

/// Roots of x^(2^k) + x = a; throws NotCoprime.
template <class Domain>
std::vector<typename Domain::value_type> solve_artin_schreier(const Domain& domain, unsigned k,
                                                              typename Domain::value_type a) {
  return ArtinSchreierSolver<Domain>(domain, k).solve(a);
}

/// L(x) = x^(2^k) + mu*bar(x) + (mu + 1)*x + nu over the tower.
struct LInstance {
  Tower tower;
  unsigned k;
  TowerEl mu;
  TowerEl nu;
};

enum class LBranch { None, Case1i, Case1ii, Case2 };

const char* branch_name(LBranch branch) noexcept;

struct LClassification {
  unsigned count = 0;  // 0, 2 or 4
  Elem xi = 0;         // xi^(2^k - 1) = 1 + mu + bar(mu); 0 when that is 0
  Elem delta = 0;      // (nu + bar(nu)) / xi^(2^k); 0 when xi = 0
  TowerEl lambda;      // lambda^(2^k) + lambda = mu*xi, smaller encoding of the pair
  LBranch branch = LBranch::None;
};

/// Classifier and root finder for L(x) = 0, specialised to one (tower, k).
///
/// Requires k odd and gcd(k, m) = 1. The Artin-Schreier matrices for the base
/// field and the tower are built once and shared between copies.
class LSolver {
 public:
  LSolver(const Tower& tower, unsigned k);

  const Tower& tower() const noexcept { return tower_; }
  unsigned k() const noexcept { return k_; }

  /// Evaluates L(x) directly.
  TowerEl eval(TowerEl mu, TowerEl nu, TowerEl x) const noexcept;

  /// Predicts the number of roots from the trace criteria, without enumeration.
  LClassification classify(TowerEl mu, TowerEl nu) const;
  /// Same criteria, evaluated with a caller-chosen lambda (must satisfy its equation).
  LClassification classify_with_lambda(TowerEl mu, TowerEl nu, TowerEl lambda) const;

  /// Exact root set via the reduction z = x + bar(x); sorted by encoding.
  std::vector<TowerEl> solve(TowerEl mu, TowerEl nu) const;

  /// xi = (1 + mu + bar(mu))^e with e = (2^k - 1)^-1 mod (2^m - 1).
  Elem xi_of(TowerEl mu) const noexcept;
  /// Both solutions of lambda^(2^k) + lambda = mu*xi, sorted by encoding.
  std::vector<TowerEl> lambda_candidates(TowerEl mu, Elem xi) const;

 private:
  // sum_{i<m} w^(2^(k i))
  TowerEl frobenius_orbit_sum(TowerEl w) const noexcept;

  Tower tower_;
  unsigned k_;
  std::uint64_t xi_exponent_;
  ArtinSchreierSolver<Field> base_as_;
  ArtinSchreierSolver<Tower> tower_as_;
};

LClassification classify_L(const LInstance& inst);
std::vector<TowerEl> solve_L(const LInstance& inst);

/// Inverse of a modulo mod via extended Euclid; throws NotCoprime if none exists.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

}  // namespace bctkit
