#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetaval/bigfloat.hpp"

namespace zetaval {

/// One named check inside a verification suite. For the errata suite, pass
/// means the documented discrepancy of a literal variant was reproduced.
struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

/// exact-core, dirichlet, lerch-multi, numeric, errata.
const std::vector<std::string>& suite_names();

/// Runs every check of the suite and returns them sorted by id.
/// DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view name, const Precision& prec);

} // namespace zetaval
