#pragma once

// Deliberately naive reference implementations used as test oracles. None of
// them share code with the library.

#include <cstdint>
#include <vector>

namespace oracle {

// Shift-and-add multiply with bitwise reduction.
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint64_t modulus, unsigned m) {
  std::uint64_t r = 0;
  std::uint64_t aa = a;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1u) r ^= aa;
    aa <<= 1;
    if ((aa >> m) & 1u) aa ^= modulus;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint64_t modulus, unsigned m) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, modulus, m);
  return r;
}

// Exhaustive search.
inline std::uint32_t inv(std::uint32_t a, std::uint64_t modulus, unsigned m) {
  for (std::uint32_t x = 1; x < (1u << m); ++x) {
    if (mul(a, x, modulus, m) == 1) return x;
  }
  return 0;
}

inline unsigned trace(std::uint32_t a, std::uint64_t modulus, unsigned m) {
  std::uint32_t sum = 0, t = a;
  for (unsigned i = 0; i < m; ++i) {
    sum ^= t;
    t = mul(t, t, modulus, m);
  }
  return sum;
}

// Polynomial over GF(2) is reducible iff some polynomial of degree 1..deg/2 divides it.
inline bool reducible(std::uint64_t p) {
  int deg = 63;
  while (deg >= 0 && !((p >> deg) & 1u)) --deg;
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (deg / 2 + 1)); ++d) {
    int dd = 63;
    while (!((d >> dd) & 1u)) --dd;
    std::uint64_t r = p;
    for (int i = deg; i >= dd; --i) {
      if ((r >> i) & 1u) r ^= d << (i - dd);
    }
    if (r == 0) return true;
  }
  return false;
}

inline int ddt(const std::vector<std::uint32_t>& f, std::uint32_t a, std::uint32_t b) {
  int c = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) c += (f[x] ^ f[x ^ a]) == b;
  return c;
}

inline std::vector<std::uint32_t> inverse(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> inv(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      if (f[y] == x) inv[x] = y;
    }
  }
  return inv;
}

// #{x : F^-1(F(x) + b) + F^-1(F(x + a) + b) = a}
inline int bct(const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& inv, std::uint32_t a,
               std::uint32_t b) {
  int c = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) c += (inv[f[x] ^ b] ^ inv[f[x ^ a] ^ b]) == a;
  return c;
}

inline int walsh(const std::vector<std::uint32_t>& f, std::uint32_t a, std::uint32_t b) {
  int s = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const unsigned bit = __builtin_parity((b & f[x]) ^ (a & x));
    s += bit ? -1 : 1;
  }
  return s;
}

}  // namespace oracle
