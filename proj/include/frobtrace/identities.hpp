#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/charsums.hpp"

namespace frobtrace {

struct SuiteEntry {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::uint64_t checks = 0;
  double max_deviation = 0.0;
  std::string note;
};

struct IdentitySuiteOptions {
  // Random instances per sampled identity.
  std::uint32_t trials = 50;
  std::uint64_t seed = 0;
  double tolerance = -1.0;  // negative: default_tolerance(q)
  // Identities whose full sweep costs more than O(q^2) are sampled above this q.
  std::uint32_t exhaustive_limit = 200;
};

// Every identity applicable to q's congruences, exhaustive where cheap and
// sampled otherwise. Inapplicable identities are reported as Skipped; the sign
// of G_{(q-1)/2} as Informational.
std::vector<SuiteEntry> run_identity_suite(const GaussTable& table,
                                           const IdentitySuiteOptions& options = {});

bool suite_passed(const std::vector<SuiteEntry>& entries) noexcept;

}  // namespace frobtrace
