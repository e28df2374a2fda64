#pragma once

#include <array>
#include <vector>

#include "bctkit/butterfly.hpp"
#include "bctkit/solvers.hpp"

namespace bctkit {

/// Coefficients of the difference equation F(x + a) + F(x) = b after x -> a x:
///   tau1 bar(x)^(2^k) + tau2 x^(2^k) + tau3 bar(x) + tau4 x + tau5 = 0,
/// and of its combination with the conjugate equation,
///   v1 x^(2^k) + v2 bar(x) + v3 x + v4 = 0.
struct DiffCoeffs {
  std::array<TowerEl, 5> tau;
  std::array<TowerEl, 4> v;
};

/// Which of the algebraic relations between the tau and v coefficients hold.
struct DiffProperties {
  bool v_sum_zero = false;     // v1 + v2 + v3 = 0
  bool tau_sums = false;       // tau1 + tau2 = tau3 + tau4 = tau5 + b
  bool v4_relation = false;    // v4 = v1 + tau1 bar(b) + bar(tau2) b
  bool bilinear = false;       // the three identities that recover the tau-equation
  bool v1_nonzero = false;

  bool all() const noexcept { return v_sum_zero && tau_sums && v4_relation && bilinear && v1_nonzero; }
};

struct MuXiLambda {
  TowerEl mu;            // closed form in theta and gamma
  TowerEl mu_from_v;     // v2 / v1
  Elem xi = 0;           // ((theta+1)(gamma + bar(gamma)) + theta^2) / theta^2
  TowerEl lambda;        // (1+theta) gamma / theta^2 + 1/theta^2 + w
  TowerEl gamma;         // bar(a) / a
};

/// Everything the boomerang argument computes for one z in Z_a.
struct ZReport {
  TowerEl z;
  TowerEl mu;               // closed form
  TowerEl nu;               // closed form
  TowerEl mu_from_v;        // from diff_coeffs(z, b)
  TowerEl nu_from_v;
  Elem xi = 0;
  TowerEl lambda;
  Elem delta = 0;           // (nu + bar(nu)) / xi^(2^k)
  Elem E = 0;
  TowerEl H;
  TowerEl Fz;
  unsigned delta_trace = 0;          // Tr_1^m(delta)
  unsigned delta_trace_closed = 0;   // Tr_1^n(F(z) bar(b) / ((1+t+t^(2^k))^2 E^(2^k+1)))
  unsigned second_trace = 0;         // Tr_1^n(lambda^(2^k) bar(nu) / xi^(2^k))
  unsigned second_trace_closed = 0;  // Tr_1^n(H(z) bar(b) / (...)) + 1
  unsigned predicted_roots = 0;      // 4 iff both traces vanish
  unsigned classified_roots = 0;     // LSolver::classify(mu, nu).count
};

struct BoomerangReport {
  TowerEl a;
  TowerEl b;
  std::array<ZReport, 3> per_z;   // z = a, eta_a, a + eta_a
  unsigned delta_trace_sum = 0;   // sum of the three Tr_1^m(delta_z), mod 2
  bool all_delta_zero = false;
  bool all_second_one = false;
  unsigned predicted_count = 0;   // sum of predicted_roots = S_F(a, b)
};

/// Difference-equation and boomerang machinery for one theta-built butterfly.
/// All results are plain data; nothing here prints.
class Diagnostics {
 public:
  /// Throws InvalidParams when the butterfly carries no theta.
  explicit Diagnostics(const Butterfly& butterfly);

  const Butterfly& butterfly() const noexcept { return butterfly_; }
  const LSolver& solver() const noexcept { return solver_; }
  const Tower& tower() const noexcept { return butterfly_.tower(); }

  /// Throws ZeroDirection for a = 0.
  DiffCoeffs diff_coeffs(TowerEl a, TowerEl b) const;
  DiffProperties check_properties(const DiffCoeffs& dc, TowerEl b) const;
  /// Left-hand side of the tau-equation at x.
  TowerEl eval_tau_equation(const DiffCoeffs& dc, TowerEl x) const noexcept;
  /// (mu, nu) of the normalised equation x^(2^k) + mu bar(x) + (1+mu) x + nu = 0.
  std::pair<TowerEl, TowerEl> reduced(const DiffCoeffs& dc) const;

  MuXiLambda mu_xi_lambda(TowerEl a) const;

  /// All x with F(x + a) + F(x) = b, via the linearized solver; sorted by encoding.
  std::vector<TowerEl> solve_difference(TowerEl a, TowerEl b) const;
  /// Roots of H_a(x) = F(x + a) + F(x) + F(a) through the solver.
  std::vector<TowerEl> kernel_H(TowerEl a) const;
  /// eta_a = a * lambda = phi(a).
  TowerEl eta(TowerEl a) const noexcept { return phi(a); }
  /// {0, a, eta_a, a + eta_a}, sorted by encoding.
  std::vector<TowerEl> kernel_closed_form(TowerEl a) const;

  TowerEl phi(TowerEl z) const noexcept;
  Elem E(TowerEl z) const noexcept;
  TowerEl H(TowerEl z) const noexcept;

  /// Throws ZeroDirection / ZeroB.
  BoomerangReport boomerang_traces(TowerEl a, TowerEl b) const;

 private:
  TowerEl mu_closed(TowerEl gamma) const;
  Elem xi_closed(TowerEl gamma) const;
  TowerEl lambda_closed(TowerEl gamma) const;
  TowerEl nu_closed(TowerEl z, TowerEl b) const;
  // (1 + t + t^(2^k))^2 E(z)^(2^k + 1)
  Elem trace_denominator(TowerEl z) const;

  Butterfly butterfly_;
  LSolver solver_;
  Elem theta_;
  Elem theta_sq_inv_;
};

}  // namespace bctkit
