#include <doctest.h>

#include "bctkit/error.hpp"
#include "bctkit/gf2m.hpp"
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
  FAIL("no error thrown");
  return Errc::BadFormat;
}

}  // namespace

TEST_CASE("default moduli") {
  CHECK(Field::create(3).modulus() == 0b1011);
  CHECK(Field::create(5).modulus() == 0b100101);
  CHECK(Field::create(7).modulus() == 0b10000011);
  CHECK(Field::create(9).modulus() == 0b1000000011);
  CHECK(Field::create(11).modulus() == 0b100000000101);
  for (unsigned m : {3u, 5u, 7u, 9u, 11u}) CHECK_FALSE(oracle::reducible(*default_modulus(m)));
  CHECK_FALSE(default_modulus(4).has_value());
}

TEST_CASE("construction errors") {
  CHECK(error_of([] { Field::create(3, 0b1111); }) == Errc::ReducibleModulus);
  CHECK(oracle::reducible(0b1111));
  CHECK(error_of([] { Field::create(4, 0b1011); }) == Errc::DegreeMismatch);
  CHECK(error_of([] { Field::create(1); }) == Errc::UnsupportedDegree);
  CHECK(error_of([] { Field::create(33); }) == Errc::UnsupportedDegree);
  CHECK(error_of([] { Field::create(4); }) == Errc::UnsupportedDegree);
}

TEST_CASE("irreducibility agrees with trial division") {
  for (std::uint64_t p = 0b100; p < 0b10000000; ++p) {
    if (!(p & 1u)) continue;
    CAPTURE(p);
    CHECK(is_irreducible(p) == !oracle::reducible(p));
  }
}

TEST_CASE("GF(8) worked values") {
  const Field f = Field::create(3);
  CHECK(f.mul(0b010, 0b100) == 0b011);
  CHECK(f.inv(0b010) == 0b101);
  CHECK(f.frob_pow(0b010, 1) == 0b100);
  CHECK(f.trace(0b010) == 0);
  CHECK(f.trace(1) == 1);
  CHECK(f.trace(0) == 0);
  CHECK(error_of([&] { f.inv(0); }) == Errc::DivisionByZero);
  for (Elem a = 0; a < 8; ++a) {
    CHECK(f.mul(a, 1) == a);
    CHECK(f.frob_pow(a, 0) == a);
    CHECK(f.frob_pow(a, 3) == a);
  }
}

TEST_CASE("arithmetic matches the naive oracle") {
  for (unsigned m : {2u, 3u, 5u, 7u, 8u}) {
    const Field f = Field::create(m, m == 2 ? std::optional<std::uint64_t>(0b111)
                                     : m == 8 ? std::optional<std::uint64_t>(0x11b)
                                              : std::nullopt);
    CAPTURE(m);
    for (Elem a = 0; a < f.order(); ++a) {
      CHECK(f.trace(a) == oracle::trace(a, f.modulus(), m));
      if (a) CHECK(f.inv(a) == oracle::inv(a, f.modulus(), m));
      for (Elem b = 0; b < f.order(); ++b) {
        const Elem want = oracle::mul(a, b, f.modulus(), m);
        CHECK(f.mul(a, b) == want);
        CHECK(f.mul_clmul(a, b) == want);
      }
    }
  }
}

TEST_CASE("field axioms on random elements") {
  for (unsigned m : {9u, 11u, 13u, 17u, 23u, 31u}) {
    const Field f = Field::create(m, m <= 11 ? std::nullopt
                                     : m == 13 ? std::optional<std::uint64_t>(0x201b)
                                     : m == 17 ? std::optional<std::uint64_t>(0x20009)
                                     : m == 23 ? std::optional<std::uint64_t>(0x800021)
                                               : std::optional<std::uint64_t>(0x80000009));
    CAPTURE(m);
    Rng rng(m);
    for (int i = 0; i < 500; ++i) {
      const Elem a = static_cast<Elem>(uniform_below(rng, f.order()));
      const Elem b = static_cast<Elem>(uniform_below(rng, f.order()));
      const Elem c = static_cast<Elem>(uniform_below(rng, f.order()));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      CHECK(f.mul(a, b) == f.mul_clmul(a, b));
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.frob_pow(a, m) == a);
      CHECK(f.trace(a ^ b) == (f.trace(a) ^ f.trace(b)));
      CHECK(f.trace(f.sqr(a)) == f.trace(a));
      CHECK(f.pow(a, f.order() - 1) == (a ? 1u : 0u));
    }
  }
}

TEST_CASE("trace is balanced") {
  const Field f = Field::create(7);
  unsigned ones = 0;
  for (Elem a = 0; a < f.order(); ++a) ones += f.trace(a);
  CHECK(ones == 64);
}
