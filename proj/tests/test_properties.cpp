#include <doctest.h>

#include <random>

#include "qgs/catalog.hpp"
#include "qgs/cyclotomic.hpp"
#include "qgs/direct_sum.hpp"
#include "qgs/gauss.hpp"
#include "qgs/reduction.hpp"
#include "qgs/verify.hpp"

using namespace qgs;

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

SumSpec random_pure(std::mt19937_64& rng) {
  SumSpec s;
  s.kind = static_cast<SumKind>(uniform(rng, 0, 2));
  s.alternating = uniform(rng, 0, 1) == 1;
  s.arg.alpha = uniform(rng, -9, 9);
  s.arg.delta = uniform(rng, 1, 40);
  s.lower = uniform(rng, -60, 60);
  s.upper = s.lower + uniform(rng, -1, 400);
  return s;
}

// multiplier·value(base) + value(residual) - value(original) as a ring element.
CyclotomicElement reduction_defect(const SumSpec& s, const ReductionStep& step) {
  CyclotomicElement original = twice_value_element(s);
  CyclotomicElement base = twice_value_element(step.base);
  std::int64_t n = common_order(original.order(), base.order());
  std::optional<CyclotomicElement> residual;
  if (step.residual) {
    residual = twice_value_element(*step.residual);
    n = common_order(n, residual->order());
  }
  CyclotomicElement d = base.lift(n);
  d *= mpq_class(step.multiplier);
  if (residual) d += residual->lift(n);
  d -= original.lift(n);
  return d;
}

HighPrecComplex value(const std::string& id, const Params& x) {
  return evaluate_lhs(find_entry(id)->lhs(x), 128);
}

}  // namespace

TEST_CASE("period_reduce round trip is exact") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 300; ++t) {
    const SumSpec s = random_pure(rng);
    const ReductionStep step = period_reduce(s);
    // Shifted blocks coincide term by term, so the defect is the ring zero.
    CHECK_MESSAGE(reduction_defect(s, step).is_ring_zero(), describe(s));
  }
}

TEST_CASE("even/odd split preserves the value exactly") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 150; ++t) {
    SumSpec s = random_pure(rng);
    s.arg.beta = uniform(rng, -5, 5);
    s.arg.gamma = uniform(rng, -5, 5);
    s.arg.theta_num = uniform(rng, -3, 3);
    s.arg.theta_den = uniform(rng, 1, 4);
    s.upper = s.lower + uniform(rng, -1, 120);
    auto [even, odd] = split_even_odd(s);
    const CyclotomicElement a = twice_value_element(s);
    const CyclotomicElement b = twice_value_element(even);
    const CyclotomicElement c = twice_value_element(odd);
    const std::int64_t n = common_order(common_order(a.order(), b.order()), c.order());
    if (n > kExactTestOrderCap) continue;
    CyclotomicElement d = b.lift(n);
    d += c.lift(n);
    d -= a.lift(n);
    CHECK_MESSAGE(embeds_to_zero(d), describe(s));
    CHECK(even.term_count() + odd.term_count() == s.term_count());
  }
}

TEST_CASE("D3 minus E12 is the half-period contribution") {
  for (std::int64_t k = 1; k <= 20; ++k) {
    for (std::int64_t p = 1; p <= 3; ++p) {
      const HighPrecComplex d3 = value("D3", {k, p});
      const HighPrecComplex e12 = value("E12", {k, p});
      const HighPrecComplex half =
          cf_to_complex(ClosedFormValue(SurdValue::make({}, GaussianRational::frac(k % 2 ? -1 : 1, 2), 4 * k - 1)), 128);
      const HighPrecComplex diff = hp_sub(d3, e12);
      CHECK(hp_distance_upper(diff, half) <= diff.err + half.err);
    }
  }
}

TEST_CASE("A5 = A9 + A10 and A7 = A9 - A10") {
  for (std::int64_t k = 1; k <= 25; ++k) {
    const HighPrecComplex a9 = value("A9", {k});
    const HighPrecComplex a10 = value("A10", {k});
    const HighPrecComplex sum = hp_add(a9, a10);
    const HighPrecComplex dif = hp_sub(a9, a10);
    const HighPrecComplex a5 = value("A5", {k});
    const HighPrecComplex a7 = value("A7", {k});
    CHECK(hp_distance_upper(a5, sum) <= a5.err + sum.err);
    CHECK(hp_distance_upper(a7, dif) <= a7.err + dif.err);
  }
}

TEST_CASE("conditionally valid entries fail outside their predicate") {
  VerifyOptions opt;
  opt.evaluate_negatives = true;
  int f5 = 0, f8 = 0, f9 = 0;
  for (std::int64_t k = 2; k <= 24; k += 2) {
    const auto a = verify("F5", {k}, opt);
    const auto b = verify("F8", {k}, opt);
    CHECK((a.status == Status::Fail && a.gap > 1e-3 && a.expected_negative));
    CHECK((b.status == Status::Fail && b.gap > 1e-3 && b.expected_negative));
    ++f5;
    ++f8;
  }
  for (std::int64_t j = 1; j <= 4; ++j)
    for (std::int64_t k = 1; k <= 6; ++k)
      for (std::int64_t m = -2; m <= 2; ++m) {
        if ((j * k + m) % 2 == 0) continue;
        Params x;
        x.j = j;
        x.k = k;
        x.m = m;
        const auto r = verify("F9", x, opt);
        CHECK((r.status == Status::Fail && r.gap > 1e-3 && r.expected_negative));
        ++f9;
      }
  CHECK(f5 >= 10);
  CHECK(f8 >= 10);
  CHECK(f9 >= 10);
}

TEST_CASE("G_p(j;k;0) = p G_1(j;k;0)") {
  for (std::int64_t j : {1, 2, 5})
    for (std::int64_t k = 1; k <= 15; ++k) {
      const HighPrecComplex g1 = gauss_naive({j, k, 1, 0, 1}, 128);
      for (std::int64_t p = 1; p <= 5; ++p) {
        const HighPrecComplex gp = gauss_naive({j, k, p, 0, 1}, 128);
        const HighPrecComplex scaled = hp_scale(g1, GaussianRational(mpq_class(p)));
        CHECK(hp_distance_upper(gp, scaled) <= gp.err + scaled.err);
      }
    }
}

TEST_CASE("cf_equal is sound on random products") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const ClosedFormValue a(SurdValue::make({}, GaussianRational(mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 4))),
                                            uniform(rng, 1, 30)),
                            RationalAngle(uniform(rng, -8, 8), uniform(rng, 1, 8)));
    const ClosedFormValue b(SurdValue::make({}, GaussianRational(mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 4))),
                                            uniform(rng, 1, 30)),
                            RationalAngle(uniform(rng, -8, 8), uniform(rng, 1, 8)));
    const HighPrecComplex x = cf_to_complex(a, 128);
    const HighPrecComplex y = cf_to_complex(b, 128);
    const bool close = hp_distance_upper(x, y) <= x.err + y.err;
    if (cf_equal(a, b)) CHECK_MESSAGE(close, a.to_string() << " vs " << b.to_string());
    const HighPrecComplex prod = cf_to_complex(a * b, 128);
    const HighPrecComplex num = hp_mul(x, y);
    CHECK(hp_distance_upper(prod, num) <= prod.err + num.err);
  }
}

TEST_CASE("gauss_fast agrees with direct summation on random inputs") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t k = uniform(rng, 1, 3000);
    const std::int64_t j = uniform(rng, 1, 5000);
    std::int64_t m = uniform(rng, -k, k);
    if ((j * k + m) % 2 != 0) ++m;
    const HighPrecComplex fast = gauss_fast({j, k, m}, 128);
    const HighPrecComplex naive = quad_exp_naive({j, k, m}, 128);
    CHECK(hp_distance_upper(fast, naive) <= 1e-25);
  }
}
