#include <doctest.h>

#include "qgs/catalog.hpp"
#include "qgs/direct_sum.hpp"
#include "qgs/error.hpp"
#include "qgs/gauss.hpp"
#include "qgs/verify.hpp"

using namespace qgs;

namespace {

double gap(const HighPrecComplex& a, const HighPrecComplex& b) { return hp_distance_upper(a, b); }

}  // namespace

TEST_CASE("gauss_naive small cases") {
  const HighPrecComplex g4 = gauss_naive({1, 4, 1, 0, 1}, 128);
  CHECK(gap(g4, cf_to_complex(ClosedFormValue(GaussianRational(2, 2)), 128)) <= g4.err + 1e-35);
  const HighPrecComplex g1 = gauss_naive({1, 1, 1, 0, 1}, 128);
  CHECK(gap(g1, cf_to_complex(ClosedFormValue(1), 128)) <= g1.err + 1e-35);
  const HighPrecComplex g5 = gauss_naive({1, 5, 1, 0, 1}, 128);
  CHECK(gap(g5, cf_to_complex(cf_sqrt(5), 128)) <= g5.err + 1e-35);
}

TEST_CASE("ls_transform examples") {
  const LsStep s = ls_transform({1, 2, 0});
  CHECK(s.transformed == QuadExpSum{2, 1, 0});
  CHECK(cf_equal(s.factor, ClosedFormValue(SurdValue::make({}, 1, 2), RationalAngle(1, 4))));
  // total = factor * conj(S(2,1,0)) = factor * 1 = 1 + i
  CHECK(cf_equal(s.factor, ClosedFormValue(GaussianRational(1, 1))));

  const LsStep f8 = ls_transform({1, 5, -1});
  const HighPrecComplex inner = quad_exp_naive(f8.transformed, 128).conj();
  const HighPrecComplex total = hp_mul(cf_to_complex(f8.factor, 128), inner);
  const HighPrecComplex expect = evaluate_rhs(closed_form("F8", {5}), 128);
  CHECK(gap(total, expect) <= total.err + expect.err);

  CHECK_THROWS_AS(ls_transform({1, 2, 1}), Error);
  try {
    ls_transform({1, 2, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParityViolation);
  }
  CHECK_THROWS_AS(ls_transform({0, 2, 0}), Error);
}

TEST_CASE("gauss_fast examples") {
  const HighPrecComplex one = gauss_fast({2, 1, 0}, 128);
  CHECK(gap(one, cf_to_complex(ClosedFormValue(1), 128)) <= one.err + 1e-35);

  const HighPrecComplex f8 = gauss_fast({1, 5, -1}, 128);
  const HighPrecComplex expect = evaluate_rhs(closed_form("F8", {5}), 128);
  CHECK(gap(f8, expect) <= f8.err + expect.err);

  const QuadExpSum big{1, 1000003, -1};
  const HighPrecComplex fast = gauss_fast(big, 128);
  const HighPrecComplex naive = quad_exp_naive(big, 128);
  CHECK(gap(fast, naive) <= 1e-25);
}

TEST_CASE("gauss_fast parity dead end") {
  CHECK_THROWS_AS(gauss_fast({1, 2, 1}, 128), Error);
  CHECK_THROWS_AS(gauss_fast({3, 7, 0}, 128), Error);
}

TEST_CASE("gauss_fast depth is logarithmic") {
  FastTrace trace;
  gauss_fast({354224848179261915, 1000000007, 1}, 128, &trace);
  CHECK(trace.depth <= 2 * 64);
  CHECK(trace.base_k <= 8);
}

TEST_CASE("alternating flag equals theta = 1/2") {
  for (std::int64_t k = 1; k <= 12; ++k) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      const SumSpec alt = quadratic_sum(SumKind::Cexp, true, 1, p * k, 1, k);
      SumSpec theta = quadratic_sum(SumKind::Cexp, false, 1, p * k, 1, k);
      theta.arg.theta_num = 1;
      theta.arg.theta_den = 2;
      const HighPrecComplex a = direct_sum(alt, 128);
      const HighPrecComplex b = direct_sum(theta, 128);
      CHECK(gap(a, b) <= a.err + b.err);
    }
  }
}
