#include <doctest.h>
#include <omp.h>

#include "qgs/cyclotomic.hpp"
#include "qgs/direct_sum.hpp"
#include "qgs/error.hpp"
#include "qgs/reduction.hpp"
#include "qgs/sum_spec.hpp"

using namespace qgs;

namespace {

bool bit_equal(const HighPrecComplex& a, const HighPrecComplex& b) {
  return mpfr_equal_p(a.re.get(), b.re.get()) && mpfr_equal_p(a.im.get(), b.im.get()) && a.err == b.err;
}

double distance(const HighPrecComplex& a, const HighPrecComplex& b) { return hp_distance_upper(a, b); }

}  // namespace

TEST_CASE("alternating sine over 1..2 of pi n^2/4") {
  const HighPrecComplex v = direct_sum(quadratic_sum(SumKind::Sin, true, 1, 2, 1, 4), 128);
  const HighPrecComplex expect = cf_to_complex(-cf_sqrt(2) * ClosedFormValue(GaussianRational::frac(1, 2)), 128);
  CHECK(distance(v, expect) <= v.err + expect.err);
  CHECK(v.im.is_zero());
}

TEST_CASE("cosine over 1..4 of 2 pi n^2/4 is 2") {
  const HighPrecComplex v = direct_sum(quadratic_sum(SumKind::Cos, false, 1, 4, 2, 4), 128);
  CHECK(distance(v, cf_to_complex(ClosedFormValue(2), 128)) <= v.err);
}

TEST_CASE("empty range sums to exactly zero") {
  const HighPrecComplex v = direct_sum(quadratic_sum(SumKind::Cexp, false, 5, 4, 1, 3), 128);
  CHECK(v.re.is_zero());
  CHECK(v.im.is_zero());
  CHECK(v.err == 0.0);
}

TEST_CASE("term cap") {
  SumSpec s = quadratic_sum(SumKind::Cexp, false, 1, kDirectSumCap + 1, 1, 7);
  CHECK_THROWS_AS(direct_sum(s, 128), Error);
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
  SumSpec s = quadratic_sum(SumKind::Cexp, true, -3000, 50000, 5, 997);
  s.arg.beta = 3;
  s.arg.theta_num = 1;
  s.arg.theta_den = 6;
  const HighPrecComplex serial = direct_sum_serial(s, 128);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const HighPrecComplex par = direct_sum(s, 128);
    CHECK(distance(par, serial) <= par.err + serial.err);
    if (threads > 1) {
      omp_set_num_threads(1);
      CHECK(bit_equal(par, direct_sum(s, 128)));
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("residue map") {
  SumSpec s = quadratic_sum(SumKind::Cexp, true, 0, 10, 1, 4);
  const ResidueMap r(s);
  CHECK(r.half_modulus() == 4);
  // n = 1: pi/4 plus pi from (-1)^1 -> 5/4 pi
  CHECK(r(1) == 5);
  CHECK(r(2) == 4);
}

TEST_CASE("SumSpec JSON round trip") {
  SumSpec s = quadratic_sum(SumKind::Cos, true, -2, 9, 3, 11);
  s.arg.beta = -4;
  s.arg.gamma = 2;
  s.arg.theta_num = 1;
  s.arg.theta_den = 3;
  CHECK(sum_spec_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(sum_spec_from_json(nlohmann::json{{"kind", "tan"}}), Error);
}

TEST_CASE("cyclotomic polynomials") {
  const auto p12 = cyclotomic_polynomial(12);
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == 1);
  CHECK(p12[1] == 0);
  CHECK(p12[2] == -1);
  CHECK(p12[4] == 1);
  CHECK(cyclotomic_polynomial(1).size() == 2);
  CHECK(cyclotomic_polynomial(105).size() == 49);  // phi(105) = 48
}

TEST_CASE("alternating sine sum over 1..2 with pi n^2/5 vanishes exactly") {
  const SumSpec s = quadratic_sum(SumKind::Sin, true, 1, 2, 1, 5);
  CHECK(embeds_to_zero(twice_value_element(s)));
  const SumSpec t = quadratic_sum(SumKind::Sin, true, 1, 3, 1, 5);
  CHECK_FALSE(embeds_to_zero(twice_value_element(t)));
}

TEST_CASE("cyclotomic embedding agrees with direct summation") {
  SumSpec s = quadratic_sum(SumKind::Cexp, true, 0, 40, 3, 14);
  s.arg.beta = 1;
  const HighPrecComplex a = cyclotomic_sum(s).embed(128);
  const HighPrecComplex b = direct_sum(s, 128);
  CHECK(distance(a, b) <= a.err + b.err);
  const HighPrecComplex twice = twice_value_element(quadratic_sum(SumKind::Sin, false, 1, 9, 2, 9)).embed(128);
  const HighPrecComplex once = direct_sum(quadratic_sum(SumKind::Sin, false, 1, 9, 2, 9), 128);
  CHECK(distance(twice, hp_scale(once, GaussianRational(2))) <= twice.err + 2 * once.err);
}

TEST_CASE("exact test order cap") {
  CyclotomicElement e(kExactTestOrderCap * 2);
  e.add_root(1);
  CHECK_THROWS_AS(embeds_to_zero(e), Error);
}

TEST_CASE("period_reduce worked case: 8k-2 terms are twice one period") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const SumSpec s = quadratic_sum(SumKind::Sin, true, 1, 8 * k - 2, 1, 4 * k - 1);
    const ReductionStep step = period_reduce(s);
    CHECK(step.period == 4 * k - 1);
    CHECK(step.multiplier == 2);
    CHECK(step.base.lower == 1);
    CHECK(step.base.upper == 4 * k - 1);
    CHECK_FALSE(step.residual.has_value());
  }
}

TEST_CASE("period_reduce rejects linear terms") {
  SumSpec s = quadratic_sum(SumKind::Cos, false, 1, 20, 1, 3);
  s.arg.beta = 1;
  CHECK_THROWS_AS(period_reduce(s), Error);
}

TEST_CASE("quasi-period doubles when the shift flips the sign") {
  // alpha = 1, delta = 3: shifting by 3 adds pi*(6n + 9)/3, an odd multiple of pi.
  CHECK(quasi_period(quadratic_sum(SumKind::Cexp, false, 1, 10, 1, 3)) == 6);
  // The alternating sign compensates.
  CHECK(quasi_period(quadratic_sum(SumKind::Cexp, true, 1, 10, 1, 3)) == 3);
}

TEST_CASE("split_even_odd on the alternating sine of A1 shape") {
  const SumSpec s = quadratic_sum(SumKind::Sin, true, 1, 8, 1, 16);
  auto [even, odd] = split_even_odd(s);
  CHECK_FALSE(even.alternating);
  CHECK_FALSE(odd.alternating);
  CHECK(even.lower == 1);
  CHECK(even.upper == 4);
  CHECK(odd.lower == 1);
  CHECK(odd.upper == 4);
  // Even part: sin(pi m^2/4).
  CHECK(even.arg.alpha == 1);
  CHECK(even.arg.delta == 4);
  CyclotomicElement lhs = twice_value_element(s);
  CyclotomicElement rhs = twice_value_element(even);
  const std::int64_t n = common_order(common_order(lhs.order(), rhs.order()), twice_value_element(odd).order());
  CyclotomicElement diff = lhs.lift(n);
  diff -= rhs.lift(n);
  diff -= twice_value_element(odd).lift(n);
  CHECK(embeds_to_zero(diff));
}

TEST_CASE("unreduced theta gives the same sum as theta = 0") {
  SumSpec s = quadratic_sum(SumKind::Cos, false, -22, -14, -4, 31);
  s.arg.beta = 1;
  s.arg.gamma = 4;
  SumSpec t = s;
  t.arg.theta_num = 0;
  t.arg.theta_den = 3;
  const HighPrecComplex a = direct_sum(s, 128);
  const HighPrecComplex b = direct_sum(t, 128);
  CHECK(hp_distance_upper(a, b) <= a.err + b.err);
  CHECK(t.half_modulus() == 31);
}
