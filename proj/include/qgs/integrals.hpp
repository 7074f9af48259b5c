#pragma once

// Integrals over [0, inf) whose values reduce to short finite sums, checked
// by quadrature against those sums.

#include <cstdint>
#include <string>
#include <vector>

#include "qgs/bigfloat.hpp"
#include "qgs/verify.hpp"

namespace qgs {

enum class IntegralId { X6A, A1R1, XY6B, C10b, C7A2 };

std::string to_string(IntegralId id);
IntegralId integral_id_from_string(const std::string& s);
const std::vector<IntegralId>& all_integral_ids();

struct IntegralSpec {
  IntegralId id = IntegralId::A1R1;
  long double a = 1;
  std::int64_t k = 1;
  long double s = 0;  // X6A only
  long double b = 0;  // C7A2 only
};

/// Throws PreconditionViolation when the decay condition (or the X6A range
/// restriction 4a <= (2k-1)pi, 0 <= s <= 4) does not hold.
void check_preconditions(const IntegralSpec& spec);

/// Exponential decay rate c of the integrand envelope, |f(v)| <= 4 (1+v^2)^s e^{-c v}.
long double decay_rate(const IntegralSpec& spec);

struct QuadratureResult {
  HighPrecComplex value;
  double est_error = 0;  // quadrature estimate plus truncation bound
  std::int64_t evaluations = 0;
  long double cutoff = 0;
};

/// Requires tol >= 1e-12.
QuadratureResult eval_integral(const IntegralSpec& spec, double tol);
HighPrecComplex rhs_sum(const IntegralSpec& spec, Precision prec = 128);
/// PASS iff |integral - sum| <= est_error + tol.
VerificationRecord check_integral(const IntegralSpec& spec, double tol);

nlohmann::json integral_params_json(const IntegralSpec& spec);

}  // namespace qgs
