#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "bctkit/butterfly.hpp"
#include "bctkit/error.hpp"
#include "bctkit/random.hpp"
#include "oracle.hpp"

using namespace bctkit;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::BadFormat;
}

// (x + alpha y)^(2^k+1) + (beta y)^(2^k+1) by plain repeated multiplication.
Elem R_oracle(const Field& f, Elem alpha, Elem beta, unsigned k, Elem x, Elem y) {
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;
  const Elem u = x ^ oracle::mul(alpha, y, f.modulus(), f.degree());
  const Elem v = oracle::mul(beta, y, f.modulus(), f.degree());
  return oracle::pow(u, e, f.modulus(), f.degree()) ^ oracle::pow(v, e, f.modulus(), f.degree());
}

}  // namespace

TEST_CASE("normalize_k") {
  CHECK(normalize_k(5, 2) == 3);
  CHECK(normalize_k(5, 1) == 1);
  CHECK(normalize_k(7, 4) == 3);
  CHECK(error_of([] { normalize_k(9, 3); }) == Errc::NotCoprime);
  CHECK(error_of([] { normalize_k(5, 0); }) == Errc::NotCoprime);
  CHECK(error_of([] { normalize_k(5, 5); }) == Errc::NotCoprime);
}

TEST_CASE("theta parametrization") {
  const Field f = Field::create(3);
  const auto [alpha, beta] = theta_to_alpha_beta(f, 0b010);
  CHECK(alpha == 0b100);
  CHECK(beta == 0b110);
  CHECK(error_of([&] { theta_to_alpha_beta(f, 1); }) == Errc::ThetaYieldsTrivialPair);
  CHECK(error_of([&] { theta_to_alpha_beta(f, 0); }) == Errc::InvalidParams);
  for (unsigned m : {3u, 5u, 7u, 9u}) {
    const Field fm = Field::create(m);
    for (Elem th = 2; th < fm.order(); ++th) {
      const auto [a, b] = theta_to_alpha_beta(fm, th);
      CHECK(pair_condition_holds(fm, a, b));
      CHECK(a > 1);
      CHECK(b > 1);
    }
  }
}

TEST_CASE("R and its partial inverse") {
  const Tower t(Field::create(3));
  const Field& f = t.base();
  const Butterfly bf = Butterfly::from_theta(t, 1, 0b010);
  const Elem a = bf.params().alpha, b = bf.params().beta;
  CHECK(bf.R(0b010, 1) == R_oracle(f, a, b, 1, 0b010, 1));
  for (Elem x = 0; x < 8; ++x) {
    CHECK(bf.R(x, 0) == f.pow(x, 3));
    CHECK(bf.R(0, x) == f.mul(f.pow(a, 3) ^ f.pow(b, 3), f.pow(x, 3)));
    for (Elem y = 0; y < 8; ++y) {
      CHECK(bf.R(x, y) == R_oracle(f, a, b, 1, x, y));
      CHECK(bf.R(bf.R_inverse(x, y), y) == x);
    }
  }
  for (unsigned k : {1u, 2u, 3u, 4u}) {
    const Tower t5(Field::create(5));
    const Butterfly b5 = Butterfly::from_theta(t5, k, 7);
    for (Elem y = 0; y < 32; ++y) {
      std::vector<bool> hit(32, false);
      for (Elem x = 0; x < 32; ++x) {
        CHECK(b5.R(x, y) == R_oracle(t5.base(), b5.params().alpha, b5.params().beta, k, x, y));
        hit[b5.R(x, y)] = true;
        CHECK(b5.R(b5.R_inverse(x, y), y) == x);
      }
      CHECK(std::count(hit.begin(), hit.end(), true) == 32);
    }
  }
}

TEST_CASE("coefficient sets") {
  for (unsigned m : {3u, 5u, 7u}) {
    const Tower t(Field::create(m));
    const Field& f = t.base();
    for (unsigned k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      for (Elem th = 2; th < f.order(); ++th) {
        const Butterfly bf = Butterfly::from_theta(t, k, th);
        const auto& c = bf.coeffs();
        CHECK(c.consistent());
        const unsigned kk = bf.params().k_odd;
        const Elem p = th ^ f.sqr(th);
        CHECK(c.c[2] == (1u ^ f.mul(p, f.frob_pow(p, kk))));
        const Elem a = bf.params().alpha;
        CHECK(c.e[2] == (1u ^ a ^ f.frob_pow(a, kk)));
      }
    }
  }
  // e3 does not involve beta
  const Tower t(Field::create(5));
  const auto b1 = Butterfly::from_alpha_beta(t, 1, 5, 6);
  const auto b2 = Butterfly::from_alpha_beta(t, 1, 5, 19);
  CHECK(b1.coeffs().e[2] == b2.coeffs().e[2]);
  CHECK(error_of([&] { Butterfly::from_alpha_beta(t, 1, 1, 6); }) == Errc::InvalidParams);
  CHECK(error_of([&] { Butterfly::from_alpha_beta(t, 1, 5, 0); }) == Errc::InvalidParams);
  CHECK(error_of([&] { Butterfly::from_alpha_beta(t, 1, 5, 40); }) == Errc::InvalidParams);
}

TEST_CASE("univariate form") {
  const Tower t(Field::create(5));
  Rng rng(3);
  for (unsigned k : {1u, 3u}) {
    const Butterfly bf = Butterfly::from_theta(t, k, 9);
    const auto& c = bf.coeffs().c;
    CHECK(bf.F(Tower::zero()).is_zero());
    CHECK(bf.F(Tower::one()) == Tower::embed(c[0] ^ c[1] ^ c[2] ^ c[3]));
    for (int i = 0; i < 500; ++i) {
      const TowerEl z = t.decode(uniform_below(rng, t.order()));
      // bar(F(z)) is F evaluated at bar(z) with c1 <-> c2 and c3 <-> c4
      const TowerEl zb = Tower::bar(z);
      const TowerEl zbk = t.frob_pow(zb, k);
      const TowerEl zk = t.frob_pow(z, k);
      const TowerEl swapped = t.mul(zbk, t.scale(c[1], zb) + t.scale(c[3], z)) +
                              t.mul(zk, t.scale(c[0], z) + t.scale(c[2], zb));
      CHECK(Tower::bar(bf.F(z)) == t.mul(zbk, t.scale(c[0], zb) + t.scale(c[2], z)) +
                                       t.mul(zk, t.scale(c[1], z) + t.scale(c[3], zb)));
      CHECK(swapped == bf.F(z));
      // F = alpha^-(2^k+1) G
      const Field& f = t.base();
      const Elem a = bf.params().alpha;
      CHECK(bf.F(z) == t.scale(f.inv(f.mul(a, f.frob_pow(a, k))), bf.G(z)));
    }
  }
}

TEST_CASE("closed and open butterflies") {
  const Tower t(Field::create(3));
  const Butterfly bf = Butterfly::from_theta(t, 1, 0b010);
  const SBoxTable closed = bf.closed_table();
  CHECK(closed[0] == 0);
  CHECK(is_permutation(closed));
  CHECK(is_permutation(bf.univariate_table()));

  const Butterfly bad = Butterfly::from_alpha_beta(t, 1, 0b010, 0b010);
  CHECK_FALSE(bad.params().condition_holds);
  CHECK_FALSE(is_permutation(bad.closed_table()));

  for (const Butterfly& b : {bf, bad}) {
    const SBoxTable open = b.open_table();
    for (std::size_t i = 0; i < open.size(); ++i) CHECK(open[open[i]] == i);
  }
  // H_R(x, 0) = (R(0, x^d), x^d)
  const Field& f = t.base();
  for (Elem x = 0; x < 8; ++x) {
    const Elem xd = f.pow(x, 5);  // 3 * 5 = 1 mod 7
    CHECK(bf.open({x, 0}) == TowerEl{bf.R(0, xd), xd});
  }
}

TEST_CASE("closed butterfly equals the quadrinomial after z -> w^2 z") {
  for (unsigned m : {3u, 5u}) {
    const Tower t(Field::create(m));
    const TowerEl w2{1, 1};
    for (unsigned k = 1; k < m; k += 2) {
      if (std::gcd(k, m) != 1) continue;
      for (Elem th = 2; th < t.base().order(); ++th) {
        const Butterfly bf = Butterfly::from_theta(t, k, th);
        for (std::uint64_t v = 0; v < t.order(); ++v) {
          const TowerEl z = t.decode(v);
          REQUIRE(bf.closed(t.mul(w2, z)) == t.mul(w2, bf.G(z)));
        }
      }
    }
  }
}

TEST_CASE("even k behaves like m - k") {
  const Tower t(Field::create(5));
  for (Elem th : {2u, 9u, 30u}) {
    const Butterfly even = Butterfly::from_theta(t, 2, th);
    const Butterfly odd = Butterfly::from_theta(t, 3, th);
    CHECK(even.params().k_odd == 3);
    CHECK(even.univariate_table() == odd.univariate_table());
    const SBoxTable ce = even.closed_table();
    CHECK(is_permutation(ce));
    CHECK(delta_uniformity(ce) == delta_uniformity(odd.closed_table()));
    CHECK(boomerang_uniformity(ce) == boomerang_uniformity(odd.closed_table()));
  }
}
