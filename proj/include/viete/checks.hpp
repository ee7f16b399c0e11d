#pragma once

// Property suite behind the `check` subcommand. Each check evaluates one
// numbered acceptance property end to end and reports a one-line verdict.

#include <cstdint>
#include <string>
#include <vector>

namespace viete {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 20170203;
};

// Printed 20-digit Table 1 strings, k = 4..15.
struct PublishedRow {
  int k;
  const char* c;
  const char* eps;
};
const std::vector<PublishedRow>& published_table1();

CheckResult check_table1();
CheckResult check_worked_values();
CheckResult check_oracle_equivalence();
CheckResult check_error_halving();
CheckResult check_unity_rate();
CheckResult check_ratio_limit();
CheckResult check_viete_product();
CheckResult check_arctan_identities(const CheckOptions& options);
CheckResult check_cancellation();

std::vector<CheckResult> run_checks(const CheckOptions& options = {});

std::string format_result(const CheckResult& result);

}  // namespace viete
