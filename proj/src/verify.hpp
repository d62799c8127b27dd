#pragma once

// Named verification suites behind `verify <suite>`. Each suite asserts a
// family of structural facts at window scale and reports check/failure
// counts; `verify all` runs every suite across the standard parameter
// matrix, which hits every case split (mu = 1, nu = 1, mu = nu, mu > nu,
// nu > mu, infinite arms).

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace orthomon {

struct SuiteResult {
  std::string suite;
  Params params = Params{ExtNat::infinity(), ExtNat::infinity()};
  bool applicable = true;  // false: parameter preconditions not met
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

const std::vector<Params>& verification_matrix();

// Raises Domain for an unknown suite name.
SuiteResult run_suite(const std::string& name, const Params& p,
                      std::uint64_t seed);

// Every suite for every matrix parameter pair.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace orthomon
