#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bctkit/gf2m.hpp"

namespace bctkit {

enum class Suite { Theorem, Necessity, OpenButterfly, Lemmas };

const char* suite_name(Suite s) noexcept;
/// Throws InvalidParams on unknown names.
Suite parse_suite(const std::string& name);

struct VerifyConfig {
  unsigned m = 3;
  std::optional<std::uint64_t> modulus;
  std::vector<unsigned> ks;     // empty: every odd k < m coprime to m
  std::vector<Elem> thetas;     // empty: every theta outside GF(2)
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000; // random (a, b) pairs where exhaustive is too large
  unsigned threads = 0;
  unsigned max_full_bits = 10;  // full BCT and exhaustive sweeps up to this n
};

struct CheckResult {
  std::string check;
  std::string scope;
  bool pass = true;
  bool informational = false;  // reported, never fails the suite
  nlohmann::json counterexample;  // null when none
  nlohmann::json detail;          // optional extra data
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  nlohmann::json to_json() const;
};

/// Throws ScaleRefusal when a full-table check would exceed max_full_bits,
/// NotCoprime / InvalidParams for bad (m, k, theta).
VerifyReport run_suite(Suite suite, const VerifyConfig& config);

}  // namespace bctkit
