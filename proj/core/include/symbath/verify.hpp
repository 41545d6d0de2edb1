// The verification suite: every closed-form claim is checked against an
// independent numeric route (propagation, brute-force algebra, or the
// Wootters oracle) at a pinned tolerance. Known printed-formula
// discrepancies are reported as flags with their residuals, never asserted
// equal and never silently corrected.
#pragma once

#include "symbath/protocol.hpp"

#include <string>
#include <vector>

namespace symbath {

enum class ClaimStatus { Pass, Fail, Flag };

struct ClaimResult {
  std::string id;
  std::string description;
  double max_residual = 0.0;
  double tolerance = 0.0;
  ClaimStatus status = ClaimStatus::Fail;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  int passed() const;
  int failed() const;
  int flagged() const;

  /// True when no non-flagged claim failed.
  bool ok() const;
};

struct VerifyOptions {
  /// Environment parameter sets exercised by the stationarity and
  /// closed-form-vs-numeric claims; empty selects the built-in defaults
  /// a = 1, c = 1, b in {0, +-0.5, 0.9, 0.99}.
  std::vector<EnvironmentParams> params_list;

  /// When positive, replaces every claim tolerance.
  double tolerance_override = 0.0;

  /// Substring filter on claim ids; empty runs everything.
  std::string claim_filter;
};

VerificationReport verify_all(const VerifyOptions& options = {});

std::vector<EnvironmentParams> default_params_list();

std::string report_table(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);
const char* to_string(ClaimStatus status);

}  // namespace symbath
