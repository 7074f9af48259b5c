#pragma once

// Extended Gauss sums and a reciprocity-driven evaluator.

#include <cstdint>

#include "qgs/bigfloat.hpp"
#include "qgs/exact.hpp"
#include "qgs/sum_spec.hpp"

namespace qgs {

/// G_p(j;k;theta) = sum_{n=1}^{kp} exp(2*pi*i*j*n^2/k + 2*pi*i*theta*n).
struct ExtendedGaussParams {
  std::int64_t j = 1;
  std::int64_t k = 1;
  std::int64_t p = 1;
  std::int64_t theta_num = 0;
  std::int64_t theta_den = 1;
};

/// S(j,k,m) = sum_{n=0}^{k-1} exp(i*pi*(j*n^2 + m*n)/k).
struct QuadExpSum {
  std::int64_t j = 1;
  std::int64_t k = 1;
  std::int64_t m = 0;
  friend bool operator==(const QuadExpSum&, const QuadExpSum&) = default;
};

SumSpec extended_gauss_spec(const ExtendedGaussParams& g);
SumSpec quad_exp_spec(const QuadExpSum& q);

/// Direct summation of G_p(j;k;theta); kp is capped like direct_sum.
HighPrecComplex gauss_naive(const ExtendedGaussParams& g, Precision prec);
/// Direct summation of S(j,k,m).
HighPrecComplex quad_exp_naive(const QuadExpSum& q, Precision prec);

/// One reciprocity step: S(j,k,m) = factor · conj(S(k,j,m)).
struct LsStep {
  ClosedFormValue factor;  // sqrt(k/j) · e^{i*pi*(jk - m^2)/(4jk)}
  QuadExpSum transformed;  // (k, j, m); its value enters conjugated
};

/// Requires j, k > 0 and jk+m even (ParityViolation otherwise).
LsStep ls_transform(const QuadExpSum& q);

struct FastTrace {
  int depth = 0;            // reciprocity applications
  std::int64_t base_k = 0;  // length of the sum evaluated directly at the end
};

/// O(log k) evaluation of S(j,k,m) for jk+m even. The accumulated factor is
/// kept exact (|factor|^2 rational, phase a RationalAngle) and converted once.
HighPrecComplex gauss_fast(const QuadExpSum& q, Precision prec, FastTrace* trace = nullptr);

}  // namespace qgs
