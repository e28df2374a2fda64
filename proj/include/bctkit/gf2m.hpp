#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace bctkit {

/// Element of GF(2^m) in polynomial basis; bit i is the coefficient of x^i.
using Elem = std::uint32_t;

/// Carry-less product of two polynomials over GF(2) of degree < 32.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept;

/// Degree of a nonzero polynomial over GF(2); -1 for the zero polynomial.
int poly_degree(std::uint64_t p) noexcept;

/// Irreducibility test: gcd(x^(2^i) + x, p) = 1 for 1 <= i <= deg(p)/2.
bool is_irreducible(std::uint64_t p);

/// Built-in modulus for m in {3, 5, 7, 9, 11}; nullopt otherwise.
std::optional<std::uint64_t> default_modulus(unsigned m) noexcept;

/// A concrete binary field GF(2^m), 2 <= m <= 32.
///
/// Immutable after construction; copies share the precomputed log/antilog
/// tables, which are built automatically for m <= 16.
class Field {
 public:
  using value_type = Elem;

  /// Throws UnsupportedDegree, DegreeMismatch or ReducibleModulus.
  /// A missing modulus selects the built-in table entry for m.
  static Field create(unsigned m, std::optional<std::uint64_t> modulus = std::nullopt);

  unsigned degree() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return std::uint64_t{1} << m_; }
  Elem mask() const noexcept { return mask_; }
  bool has_tables() const noexcept { return tables_ != nullptr; }
  bool contains(std::uint64_t v) const noexcept { return v <= mask_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }
  static constexpr Elem add(Elem a, Elem b) noexcept { return a ^ b; }

  Elem mul(Elem a, Elem b) const noexcept {
    if (tables_) {
      if (a == 0 || b == 0) return 0;
      return tables_->exp[tables_->log[a] + tables_->log[b]];
    }
    return mul_clmul(a, b);
  }
  /// Reference multiply: carry-less product followed by reduction.
  Elem mul_clmul(Elem a, Elem b) const noexcept { return reduce(clmul(a, b)); }
  Elem sqr(Elem a) const noexcept { return mul(a, a); }

  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^(2^m - 2); throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^(2^k) by k-fold squaring (k taken mod m).
  Elem frob_pow(Elem a, unsigned k) const noexcept;
  /// Absolute trace Tr_1^m(a).
  unsigned trace(Elem a) const noexcept;

  std::uint64_t to_bits(Elem a) const noexcept { return a; }
  Elem from_bits(std::uint64_t v) const noexcept { return static_cast<Elem>(v & mask_); }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;  // doubled length, no modular index reduction needed
  };

  Field(unsigned m, std::uint64_t modulus);
  Elem reduce(std::uint64_t p) const noexcept;
  void build_tables();

  unsigned m_ = 0;
  std::uint64_t modulus_ = 0;
  Elem mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace bctkit
