#include <doctest.h>

#include "bctkit/error.hpp"
#include "bctkit/verify.hpp"

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

}  // namespace

TEST_CASE("suite names") {
  for (Suite s : {Suite::Theorem, Suite::Necessity, Suite::OpenButterfly, Suite::Lemmas}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK(error_of([] { parse_suite("everything"); }) == Errc::InvalidParams);
}

TEST_CASE("suites pass at m = 3") {
  VerifyConfig cfg;
  cfg.threads = 2;
  for (Suite s : {Suite::Theorem, Suite::Necessity, Suite::OpenButterfly, Suite::Lemmas}) {
    CAPTURE(suite_name(s));
    const VerifyReport r = run_suite(s, cfg);
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
    const nlohmann::json j = r.to_json();
    CHECK(j["suite"] == suite_name(s));
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == r.checks.size());
  }
}

TEST_CASE("reports are deterministic across thread counts") {
  VerifyConfig cfg;
  cfg.m = 5;
  cfg.ks = {3};
  cfg.thetas = {2};
  cfg.samples = 100;
  cfg.seed = 4;
  cfg.threads = 1;
  const nlohmann::json one = run_suite(Suite::Lemmas, cfg).to_json();
  cfg.threads = 4;
  CHECK(run_suite(Suite::Lemmas, cfg).to_json() == one);
}

TEST_CASE("parameter errors") {
  VerifyConfig cfg;
  cfg.m = 4;
  CHECK(error_of([&] { run_suite(Suite::Theorem, cfg); }) == Errc::InvalidParams);
  cfg.m = 3;
  cfg.ks = {3};
  CHECK(error_of([&] { run_suite(Suite::Necessity, cfg); }) == Errc::NotCoprime);
  cfg.m = 7;
  cfg.ks = {1};
  CHECK(error_of([&] { run_suite(Suite::Theorem, cfg); }) == Errc::ScaleRefusal);
  cfg.m = 3;
  cfg.thetas = {1};
  CHECK(error_of([&] { run_suite(Suite::Theorem, cfg); }) == Errc::ThetaYieldsTrivialPair);
}
