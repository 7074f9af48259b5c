#include "qgs/direct_sum.hpp"

#include <omp.h>

#include <bit>
#include <cmath>
#include <vector>

#include "qgs/error.hpp"

namespace qgs {

namespace {

constexpr std::int64_t kBlock = 4096;

struct TermEvaluator {
  TermEvaluator(const SumSpec& s, Precision prec)
      : kind(s.kind), map(s), work(prec + 8), pi(prec + 8), angle(prec + 8), sn(prec), cs(prec) {
    mpfr_const_pi(pi.get(), MPFR_RNDN);
  }

  // Adds term n into (re, im).
  void accumulate(std::int64_t n, BigFloat& re, BigFloat& im) {
    const std::int64_t r = map(n);
    const std::int64_t d = map.half_modulus();
    // angle = pi*r/D in [0, 2pi)
    mpfr_mul_si(angle.get(), pi.get(), r, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), d, MPFR_RNDN);
    switch (kind) {
      case SumKind::Sin:
        mpfr_sin(sn.get(), angle.get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), sn.get(), MPFR_RNDN);
        break;
      case SumKind::Cos:
        mpfr_cos(cs.get(), angle.get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), cs.get(), MPFR_RNDN);
        break;
      case SumKind::Cexp:
        mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
        mpfr_add(re.get(), re.get(), cs.get(), MPFR_RNDN);
        mpfr_add(im.get(), im.get(), sn.get(), MPFR_RNDN);
        break;
    }
  }

  SumKind kind;
  ResidueMap map;
  BigFloat work, pi, angle, sn, cs;
};

std::int64_t checked_count(const SumSpec& s) {
  const std::int64_t count = s.term_count();
  if (count > kDirectSumCap) {
    throw Error(ErrorKind::RangeTooLarge, "direct_sum term count " + std::to_string(count) + " exceeds cap");
  }
  return count;
}

// Accumulator width: partial sums are bounded by the term count, so
// prec + bitlen(count) + 2 keeps the total summation error below count·2^-prec.
Precision accumulator_precision(std::int64_t count, Precision prec) {
  return prec + static_cast<Precision>(std::bit_width(static_cast<std::uint64_t>(count))) + 2;
}

// Per term: angle error < 2^(-prec-3), final rounding <= 2^(-prec-1).
// Accumulation adds at most count·2^-prec/2. Report 2·count·2^-prec.
double direct_sum_radius(std::int64_t count, Precision prec) {
  return std::ldexp(static_cast<double>(count), 1 - static_cast<int>(prec));
}

}  // namespace

HighPrecComplex direct_sum_serial(const SumSpec& s, Precision prec) {
  const std::int64_t count = checked_count(s);
  if (count == 0) return HighPrecComplex(prec);
  const Precision acc = accumulator_precision(count, prec);
  HighPrecComplex out(acc);
  TermEvaluator eval(s, prec);
  for (std::int64_t n = s.lower; n <= s.upper; ++n) eval.accumulate(n, out.re, out.im);
  out.err = direct_sum_radius(count, prec);
  return out;
}

HighPrecComplex direct_sum(const SumSpec& s, Precision prec) {
  const std::int64_t count = checked_count(s);
  if (count == 0) return HighPrecComplex(prec);
  if (count <= kBlock) return direct_sum_serial(s, prec);

  const Precision acc = accumulator_precision(count, prec);
  const std::int64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<BigFloat> block_re, block_im;
  block_re.reserve(blocks);
  block_im.reserve(blocks);
  for (std::int64_t b = 0; b < blocks; ++b) {
    block_re.emplace_back(acc);
    block_im.emplace_back(acc);
  }

#pragma omp parallel
  {
    TermEvaluator eval(s, prec);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::int64_t first = s.lower + b * kBlock;
      const std::int64_t last = std::min(s.upper, first + kBlock - 1);
      for (std::int64_t n = first; n <= last; ++n) eval.accumulate(n, block_re[b], block_im[b]);
    }
  }

  HighPrecComplex out(acc);
  for (std::int64_t b = 0; b < blocks; ++b) {
    mpfr_add(out.re.get(), out.re.get(), block_re[b].get(), MPFR_RNDN);
    mpfr_add(out.im.get(), out.im.get(), block_im[b].get(), MPFR_RNDN);
  }
  out.err = direct_sum_radius(count, prec);
  return out;
}

}  // namespace qgs
