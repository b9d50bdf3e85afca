#pragma once

// Identity suite behind `qbern verify`.

#include "qbern/qbernoulli.hpp"

#include <string>
#include <vector>

namespace qbern {

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first failure, if any
};

/// Runs every identity against `table` (and the context it carries).
/// Identities that don't involve the table use orders up to table.max_n().
std::vector<CheckResult> run_identity_suite(const BernoulliTable& table, unsigned seed = 20240601);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qbern
