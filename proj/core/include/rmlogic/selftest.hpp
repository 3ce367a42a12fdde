#pragma once

#include <string>
#include <vector>

namespace rmlogic {

enum class CheckStatus { Pass, Fail, Discrepancy };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  /// No check failed. Discrepancies are reported findings, not failures.
  bool ok() const;
};

/// Every exhaustive invariant sweep of the library at desk scale.
SelftestReport run_selftest();

/// "PASS|FAIL|DISCREPANCY <name>: <detail>" lines.
std::string format_selftest(const SelftestReport& r);
std::string status_name(CheckStatus s);

}  // namespace rmlogic
