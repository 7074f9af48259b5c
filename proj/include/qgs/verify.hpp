#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "qgs/bigfloat.hpp"
#include "qgs/catalog.hpp"

namespace qgs {

enum class Status { Pass, Fail, OutOfDomain, ExactPass };

std::string to_string(Status s);

struct VerificationRecord {
  std::string id;
  Params params;
  nlohmann::json params_json = nlohmann::json::object();
  std::optional<HighPrecComplex> lhs_value;
  std::optional<HighPrecComplex> rhs_value;
  double gap = 0.0;    // upper bound on |lhs - rhs| at the stored points
  double bound = 0.0;  // lhs.err + rhs.err + tolerance
  Status status = Status::OutOfDomain;
  /// Point outside the validity predicate of an entry that is known to fail there.
  bool expected_negative = false;
  std::string note;
  std::chrono::nanoseconds elapsed{0};

  /// Counts as a regression: FAIL on a valid point, or PASS on an expected negative.
  bool unexpected() const;
};

struct VerifyOptions {
  Precision precision = 128;
  double tolerance = 1e-30;
  /// Evaluate points outside the validity predicate of entries flagged
  /// negative_outside_validity instead of reporting OUT_OF_DOMAIN.
  bool evaluate_negatives = false;
  /// Try the exact cyclotomic test when the right side is a Gaussian rational.
  bool exact = true;
};

HighPrecComplex evaluate_lhs(const Lhs& lhs, Precision prec);
HighPrecComplex evaluate_rhs(const RHSExpr& rhs, Precision prec);

/// Exact decision of lhs == rhs via the group ring. Empty when the shape is
/// not eligible (surd coefficients, residual sums, order above the cap).
std::optional<bool> exact_equal(const Lhs& lhs, const RHSExpr& rhs);

VerificationRecord verify(const IdentityEntry& entry, const Params& params, const VerifyOptions& opt = {});
/// Throws PreconditionViolation for an unknown id.
VerificationRecord verify(const std::string& id, const Params& params, const VerifyOptions& opt = {});

nlohmann::json to_json(const VerificationRecord& r, bool include_timing = false);

}  // namespace qgs
