#include "bctkit/gf2m.hpp"

#include <bit>

#include "bctkit/error.hpp"

namespace bctkit {

namespace {

constexpr unsigned kTableMaxDegree = 16;

// p mod q over GF(2); q nonzero.
std::uint64_t poly_mod(std::uint64_t p, std::uint64_t q) noexcept {
  const int dq = poly_degree(q);
  for (int dp = poly_degree(p); dp >= dq; dp = poly_degree(p)) {
    p ^= q << (dp - dq);
  }
  return p;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
  return poly_mod(clmul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), q);
}

}  // namespace

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
  std::uint64_t acc = 0;
  std::uint64_t wide = a;
  while (b != 0) {
    if (b & 1u) acc ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return acc;
}

int poly_degree(std::uint64_t p) noexcept {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

bool is_irreducible(std::uint64_t p) {
  const int m = poly_degree(p);
  if (m < 1 || m > 32) return false;
  if (m == 1) return true;
  if ((p & 1u) == 0) return false;
  std::uint64_t power = 0b10;  // x
  for (int i = 1; i <= m / 2; ++i) {
    power = poly_mulmod(power, power, p);
    if (poly_gcd(p, power ^ 0b10) != 1) return false;
  }
  return true;
}

std::optional<std::uint64_t> default_modulus(unsigned m) noexcept {
  switch (m) {
    case 3: return 0b1011;              // x^3 + x + 1
    case 5: return 0b100101;            // x^5 + x^2 + 1
    case 7: return 0b10000011;          // x^7 + x + 1
    case 9: return 0b1000000011;        // x^9 + x + 1
    case 11: return 0b100000000101;     // x^11 + x^2 + 1
    default: return std::nullopt;
  }
}

Field Field::create(unsigned m, std::optional<std::uint64_t> modulus) {
  if (m < 2 || m > 32) {
    throw Error(Errc::UnsupportedDegree, "field degree must lie in [2, 32], got " + std::to_string(m));
  }
  if (!modulus) {
    modulus = default_modulus(m);
    if (!modulus) {
      throw Error(Errc::UnsupportedDegree,
                  "no built-in modulus for m=" + std::to_string(m) + "; pass one explicitly");
    }
  }
  if (poly_degree(*modulus) != static_cast<int>(m)) {
    throw Error(Errc::DegreeMismatch, "modulus degree " + std::to_string(poly_degree(*modulus)) +
                                          " does not match m=" + std::to_string(m));
  }
  if (!is_irreducible(*modulus)) {
    throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(2)");
  }
  return Field(m, *modulus);
}

Field::Field(unsigned m, std::uint64_t modulus)
    : m_(m), modulus_(modulus), mask_(static_cast<Elem>((std::uint64_t{1} << m) - 1)) {
  if (m_ <= kTableMaxDegree) build_tables();
}

Elem Field::reduce(std::uint64_t p) const noexcept {
  for (int d = poly_degree(p); d >= static_cast<int>(m_); d = poly_degree(p)) {
    p ^= modulus_ << (d - static_cast<int>(m_));
  }
  return static_cast<Elem>(p);
}

void Field::build_tables() {
  const std::uint32_t group = mask_;  // 2^m - 1
  // The modulus need not be primitive, so search for a generator.
  Elem generator = 0;
  for (Elem g = 2; g <= mask_ && generator == 0; ++g) {
    Elem acc = g;
    std::uint32_t order = 1;
    while (acc != 1) {
      acc = mul_clmul(acc, g);
      ++order;
    }
    if (order == group) generator = g;
  }

  auto tables = std::make_shared<Tables>();
  tables->log.assign(std::size_t{1} << m_, 0);
  tables->exp.assign(2 * std::size_t{group}, 0);
  Elem acc = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    tables->exp[i] = acc;
    tables->exp[i + group] = acc;
    tables->log[acc] = i;
    acc = mul_clmul(acc, generator);
  }
  tables_ = std::move(tables);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, order() - 2);
}

Elem Field::frob_pow(Elem a, unsigned k) const noexcept {
  k %= m_;
  for (unsigned i = 0; i < k; ++i) a = mul(a, a);
  return a;
}

unsigned Field::trace(Elem a) const noexcept {
  Elem acc = a;
  Elem conj = a;
  for (unsigned i = 1; i < m_; ++i) {
    conj = mul(conj, conj);
    acc ^= conj;
  }
  return acc & 1u;
}

}  // namespace bctkit
