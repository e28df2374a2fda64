#include <doctest.h>

#include "bctkit/error.hpp"
#include "bctkit/random.hpp"
#include "bctkit/tower.hpp"

using namespace bctkit;

TEST_CASE("conjugation in coordinates") {
  const Tower t(Field::create(3));
  CHECK(Tower::bar({0b011, 0b101}) == TowerEl{0b110, 0b101});
  for (Elem a = 0; a < 8; ++a) CHECK(Tower::bar(Tower::embed(a)) == Tower::embed(a));
  CHECK(t.encode(Tower::bar(t.decode(8))) == 9);
  CHECK(Tower::trace_rel({3, 5}) == 5);
  CHECK(t.trace(Tower::one()) == 0);
  CHECK(t.trace(Tower::omega()) == 1);
}

TEST_CASE("omega arithmetic") {
  const Tower t(Field::create(5));
  CHECK(t.mul(Tower::omega(), Tower::omega()) == TowerEl{1, 1});
  CHECK(t.inv(Tower::omega()) == TowerEl{1, 1});
  CHECK_THROWS_AS(t.inv(Tower::zero()), Error);
}

TEST_CASE("even base degree is rejected") {
  try {
    Tower t(Field::create(4, 0b10011));
    FAIL("accepted m = 4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidParams);
  }
}

TEST_CASE("encoding round trip") {
  const Tower t(Field::create(3));
  for (std::uint64_t v = 0; v < t.order(); ++v) CHECK(t.encode(t.decode(v)) == v);
}

TEST_CASE("tower properties, exhaustive at n = 6") {
  const Tower t(Field::create(3));
  unsigned ones = 0;
  for (std::uint64_t i = 0; i < t.order(); ++i) {
    const TowerEl z = t.decode(i);
    const TowerEl zb = Tower::bar(z);
    CHECK((z + zb).in_base());
    CHECK(t.mul(z, zb).in_base());
    CHECK(t.mul(z, zb).x == t.norm(z));
    CHECK(t.frob_pow(z, 3) == zb);
    CHECK(t.frob_pow(z, 6) == z);
    CHECK(t.pow(z, 8) == zb);
    CHECK(t.sqr(z) == t.mul(z, z));
    CHECK(Tower::bar(zb) == z);
    if (!z.is_zero()) CHECK(t.mul(z, t.inv(z)) == Tower::one());
    // trace as the sum of conjugates
    TowerEl s = Tower::zero(), c = z;
    for (int k = 0; k < 6; ++k) {
      s += c;
      c = t.sqr(c);
    }
    CHECK(s.in_base());
    CHECK(s.x == t.trace(z));
    ones += t.trace(z);
  }
  CHECK(ones == 32);
  // conjugation fixes exactly the base field
  for (std::uint64_t i = 0; i < t.order(); ++i) {
    const TowerEl z = t.decode(i);
    CHECK((Tower::bar(z) == z) == z.in_base());
  }
}

TEST_CASE("tower axioms on random elements") {
  for (unsigned m : {5u, 7u, 11u}) {
    const Tower t(Field::create(m));
    Rng rng(100 + m);
    auto draw = [&] { return t.decode(uniform_below(rng, t.order())); };
    for (int i = 0; i < 10000 / (m == 11 ? 4 : 1); ++i) {
      const TowerEl a = draw(), b = draw(), c = draw();
      CHECK(Tower::bar(t.mul(a, b)) == t.mul(Tower::bar(a), Tower::bar(b)));
      CHECK(t.mul(a, b) == t.mul(b, a));
      CHECK(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
      CHECK(t.mul(a, b + c) == t.mul(a, b) + t.mul(a, c));
      CHECK(t.frob_pow(a, t.n()) == a);
      CHECK(t.trace(a + b) == (t.trace(a) ^ t.trace(b)));
    }
  }
}
