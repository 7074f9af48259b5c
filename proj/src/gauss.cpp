#include "qgs/gauss.hpp"

#include <cmath>
#include <utility>

#include "qgs/direct_sum.hpp"
#include "qgs/error.hpp"

namespace qgs {

namespace {

constexpr int kMaxDepth = 200;
constexpr std::int64_t kBaseLength = 8;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool even_parity(std::int64_t j, std::int64_t k, std::int64_t m) {
  const __int128 v = static_cast<__int128>(j) * k + m;
  return v % 2 == 0;
}

// sqrt(mag2)·e^{i*pi*phase} without factoring the radicand.
HighPrecComplex polar_factor(const mpq_class& mag2, const mpq_class& phase, Precision prec) {
  const double bound = std::sqrt(mag2.get_d()) * (1.0 + 1e-12) + 1.0;
  const Precision w = prec + 16 + static_cast<Precision>(std::ceil(std::log2(bound)));
  BigFloat r(mag2, w), angle(w), t(phase, w), sn(w), cs(w);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul(angle.get(), angle.get(), t.get(), MPFR_RNDN);
  mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
  HighPrecComplex out(w);
  mpfr_mul(out.re.get(), r.get(), cs.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), r.get(), sn.get(), MPFR_RNDN);
  out.err = mul_up(bound, std::ldexp(1.0, -static_cast<int>(w) + 7));
  return out;
}

}  // namespace

SumSpec extended_gauss_spec(const ExtendedGaussParams& g) {
  if (g.k <= 0 || g.p < 0) throw Error(ErrorKind::PreconditionViolation, "k must be positive and p non-negative");
  SumSpec s;
  s.kind = SumKind::Cexp;
  s.lower = 1;
  s.upper = g.k * g.p;
  s.arg.alpha = 2 * g.j;
  s.arg.delta = g.k;
  s.arg.theta_num = g.theta_num;
  s.arg.theta_den = g.theta_den;
  s.arg.normalize();
  return s;
}

SumSpec quad_exp_spec(const QuadExpSum& q) {
  if (q.k <= 0) throw Error(ErrorKind::PreconditionViolation, "k must be positive");
  SumSpec s;
  s.kind = SumKind::Cexp;
  s.lower = 0;
  s.upper = q.k - 1;
  s.arg.alpha = q.j;
  s.arg.beta = q.m;
  s.arg.delta = q.k;
  return s;
}

HighPrecComplex gauss_naive(const ExtendedGaussParams& g, Precision prec) {
  return direct_sum(extended_gauss_spec(g), prec);
}

HighPrecComplex quad_exp_naive(const QuadExpSum& q, Precision prec) { return direct_sum(quad_exp_spec(q), prec); }

LsStep ls_transform(const QuadExpSum& q) {
  if (q.j <= 0 || q.k <= 0) throw Error(ErrorKind::PreconditionViolation, "ls_transform needs j, k > 0");
  if (!even_parity(q.j, q.k, q.m)) {
    throw Error(ErrorKind::ParityViolation, "jk+m = " + std::to_string(q.j * q.k + q.m) + " is odd");
  }
  const mpz_class j = q.j, k = q.k, m = q.m;
  const mpz_class jk = j * k;
  LsStep step;
  const SurdValue magnitude = SurdValue::sqrt_of(mpq_class(k, j));
  step.factor = ClosedFormValue(magnitude, RationalAngle(mpq_class(mpz_class(jk - m * m), mpz_class(4 * jk))));
  step.transformed = QuadExpSum{q.k, q.j, q.m};
  return step;
}

HighPrecComplex gauss_fast(const QuadExpSum& q, Precision prec, FastTrace* trace) {
  if (q.j <= 0 || q.k <= 0) throw Error(ErrorKind::PreconditionViolation, "gauss_fast needs j, k > 0");
  if (!even_parity(q.j, q.k, q.m)) {
    throw Error(ErrorKind::ParityViolation, "jk+m = " + std::to_string(q.j * q.k + q.m) + " is odd");
  }

  // Invariant: S_original = sqrt(mag2) · e^{i*pi*phase} · C(S(j,k,m)),
  // where C is complex conjugation when `conjugated` is set.
  std::int64_t j = q.j, k = q.k, m = q.m;
  mpq_class mag2 = 1;
  mpq_class phase = 0;
  bool conjugated = false;
  int depth = 0;

  HighPrecComplex base(prec);
  for (;;) {
    if (depth > kMaxDepth) throw Error(ErrorKind::RecursionDepth, "reciprocity descent did not terminate");
    if (!even_parity(j, k, m)) throw Error(ErrorKind::ParityViolation, "parity lost during descent");

    // S(j + k, k, m) = S(j, k, m + k): bring j into (-k/2, k/2].
    {
      std::int64_t r = floor_mod(j, k);
      if (2 * r > k) r -= k;
      const __int128 shift = (static_cast<__int128>(j) - r) / k;
      const __int128 m_new = static_cast<__int128>(m) + shift * k;
      j = r;
      m = static_cast<std::int64_t>(m_new % (2 * static_cast<__int128>(k)));
    }
    // S(j, k, m + 2k) = S(j, k, m): m into (-k, k].
    m = floor_mod(m, 2 * k);
    if (m > k) m -= 2 * k;

    if (k <= kBaseLength) {
      base = quad_exp_naive(QuadExpSum{j, k, m}, prec);
      break;
    }
    if (j == 0) {
      // Geometric sum of e^{i*pi*m*n/k} with m even: k if m = 0 mod 2k, else 0.
      if (floor_mod(m, 2 * k) == 0) {
        BigFloat kk(prec);
        mpfr_set_si(kk.get(), k, MPFR_RNDN);
        base = HighPrecComplex(kk, BigFloat(prec), 0.0);
      }
      break;
    }
    if (j < 0) {
      // S(-j, k, m) = conj(S(j, k, -m))
      j = -j;
      m = -m;
      conjugated = !conjugated;
    }
    // Reciprocity: S(j,k,m) = sqrt(k/j) e^{i*pi*(jk - m^2)/(4jk)} conj(S(k,j,m)).
    const mpz_class jz = j, kz = k, mz = m;
    mpq_class step_phase{mpz_class(jz * kz - mz * mz), mpz_class(4 * jz * kz)};
    step_phase.canonicalize();
    mpq_class step_mag2{kz, jz};
    step_mag2.canonicalize();
    mag2 *= step_mag2;
    // C(F·conj(S')) = C(F)·C'(S') with C' the opposite of C.
    phase = RationalAngle(conjugated ? mpq_class(phase - step_phase) : mpq_class(phase + step_phase)).value();
    conjugated = !conjugated;
    std::swap(j, k);
    ++depth;
  }
  if (trace != nullptr) {
    trace->depth = depth;
    trace->base_k = k;
  }

  if (conjugated) base = base.conj();
  if (base.re.is_zero() && base.im.is_zero() && base.err == 0.0) return HighPrecComplex(prec);
  return hp_mul(polar_factor(mag2, phase, prec), base);
}

}  // namespace qgs
