#ifndef XICHAR_VERIFY_HPP
#define XICHAR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xichar/serialize.hpp"

namespace xichar {

struct VerifyConfig {
  int max_edges = 3;  // map-table truncation; Jack weight 2 * max_edges
  std::uint64_t seed = 20261018;
  int random_trials = 40;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // first failure, or the reason for a skip
  std::vector<std::string> notes;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> nonneg_violations;

  const CheckResult* first_failure() const;
  // 0 when every identity holds and the nonnegativity report is empty, 2 on
  // an identity failure, 3 when only the nonnegativity report is nonempty.
  int exit_code() const;
};

// Runs, in order: arith, partitions, jack, cauchy, table1, oracle,
// xi-routes, xi-from-maps, chi, lambda-glue, nonnegativity. A check that
// throws is recorded as failed with the exception text.
VerifyReport verify_all(const VerifyConfig& config = {});

std::string status_name(CheckStatus s);
json to_json(const VerifyReport& report);
std::string to_pretty(const VerifyReport& report);

}  // namespace xichar

#endif
