#ifndef NCPROB_VERIFY_HPP
#define NCPROB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncprob/partitions.hpp"

namespace ncprob {

struct VerifyOptions {
  int order = 0;        // 0 = suite default
  int cases = 0;        // 0 = suite default
  std::uint64_t seed = 1;
  int oracle_cap = kDefaultOracleCap;
  double tol = 1e-10;   // operator-model suites only
};

struct VerifyReport {
  std::string id;
  int order = 0;
  int cases = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

using VerifySuite = VerifyReport (*)(const VerifyOptions&);

/// Suite ids, one per verified statement. Runs are deterministic given the
/// seed; a failure line records the offending inputs and coefficient.
const std::map<std::string, VerifySuite>& verify_registry();

std::vector<std::string> verify_ids();

/// Runs one suite; throws std::invalid_argument on an unknown id.
VerifyReport run_verify(const std::string& id, const VerifyOptions& opts = {});

}  // namespace ncprob

#endif
