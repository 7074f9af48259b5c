#pragma once

// Index rewriting on sums: peeling off whole quasi-periods, and splitting a
// range into even and odd indices.

#include <optional>
#include <string>
#include <utility>

#include "qgs/sum_spec.hpp"

namespace qgs {

/// value(original) = multiplier·value(base) + value(residual), exactly.
struct ReductionStep {
  std::string description;
  std::int64_t multiplier = 1;
  SumSpec base;
  std::optional<SumSpec> residual;
  std::int64_t period = 0;
};

/// Shift period T of a pure quadratic spec: delta when shifting n -> n+delta
/// collects the sign +1, otherwise 2*delta.
std::int64_t quasi_period(const SumSpec& s);

/// Requires beta = gamma = 0 and theta = 0 (UnsupportedShape otherwise).
ReductionStep period_reduce(const SumSpec& s);

/// Even indices n = 2m and odd indices n = 2m-1, each rewritten as a sum over m.
/// The theta term and any constant sign are folded into the quadratic argument.
std::pair<SumSpec, SumSpec> split_even_odd(const SumSpec& s);

}  // namespace qgs
