#pragma once

#include <compare>
#include <cstdint>

#include "bctkit/gf2m.hpp"

namespace bctkit {

/// Element x + w*y of GF(2^(2m)) over GF(2^m), where w^2 = w + 1.
struct TowerEl {
  Elem x = 0;
  Elem y = 0;

  friend constexpr TowerEl operator+(TowerEl a, TowerEl b) noexcept { return {a.x ^ b.x, a.y ^ b.y}; }
  TowerEl& operator+=(TowerEl other) noexcept {
    x ^= other.x;
    y ^= other.y;
    return *this;
  }
  constexpr bool is_zero() const noexcept { return x == 0 && y == 0; }
  constexpr bool in_base() const noexcept { return y == 0; }
  friend constexpr auto operator<=>(TowerEl, TowerEl) = default;
};

/// The quadratic extension GF(2^n), n = 2m, m odd.
///
/// Elements are encoded canonically as the integer x + 2^m * y; this fixes
/// the index space of every S-box table built over the tower.
class Tower {
 public:
  using value_type = TowerEl;

  /// Throws InvalidParams when the base degree is even.
  explicit Tower(Field base);

  const Field& base() const noexcept { return base_; }
  unsigned m() const noexcept { return base_.degree(); }
  unsigned n() const noexcept { return 2 * base_.degree(); }
  unsigned degree() const noexcept { return n(); }
  std::uint64_t order() const noexcept { return std::uint64_t{1} << n(); }

  std::uint64_t encode(TowerEl z) const noexcept { return z.x | (std::uint64_t{z.y} << m()); }
  TowerEl decode(std::uint64_t v) const noexcept {
    return {static_cast<Elem>(v & base_.mask()), static_cast<Elem>((v >> m()) & base_.mask())};
  }
  std::uint64_t to_bits(TowerEl z) const noexcept { return encode(z); }
  TowerEl from_bits(std::uint64_t v) const noexcept { return decode(v); }

  static constexpr TowerEl zero() noexcept { return {0, 0}; }
  static constexpr TowerEl one() noexcept { return {1, 0}; }
  static constexpr TowerEl omega() noexcept { return {0, 1}; }
  static constexpr TowerEl embed(Elem a) noexcept { return {a, 0}; }
  static constexpr TowerEl add(TowerEl a, TowerEl b) noexcept { return a + b; }

  /// Conjugation z^(2^m); in coordinates (x, y) -> (x + y, y).
  static constexpr TowerEl bar(TowerEl z) noexcept { return {z.x ^ z.y, z.y}; }

  TowerEl mul(TowerEl a, TowerEl b) const noexcept {
    const Elem yy = base_.mul(a.y, b.y);
    return {base_.mul(a.x, b.x) ^ yy, base_.mul(a.x, b.y) ^ base_.mul(a.y, b.x) ^ yy};
  }
  TowerEl scale(Elem c, TowerEl z) const noexcept { return {base_.mul(c, z.x), base_.mul(c, z.y)}; }
  TowerEl sqr(TowerEl z) const noexcept {
    const Elem y2 = base_.sqr(z.y);
    return {base_.sqr(z.x) ^ y2, y2};
  }
  /// z * bar(z), which lies in GF(2^m).
  Elem norm(TowerEl z) const noexcept {
    return base_.mul(z.x, z.x) ^ base_.mul(z.x, z.y) ^ base_.mul(z.y, z.y);
  }
  /// Throws DivisionByZero for z = 0.
  TowerEl inv(TowerEl z) const;
  TowerEl div(TowerEl a, TowerEl b) const { return mul(a, inv(b)); }
  TowerEl pow(TowerEl z, std::uint64_t e) const noexcept;
  /// z^(2^k), k taken mod n.
  TowerEl frob_pow(TowerEl z, unsigned k) const noexcept;

  /// Relative trace z + bar(z), equal to the w-coordinate y.
  static constexpr Elem trace_rel(TowerEl z) noexcept { return z.y; }
  /// Absolute trace Tr_1^n(z) = Tr_1^m(z + bar(z)).
  unsigned trace(TowerEl z) const noexcept { return base_.trace(z.y); }

 private:
  Field base_;
};

}  // namespace bctkit
