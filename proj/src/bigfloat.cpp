#include "qgs/bigfloat.hpp"

#include <cfenv>
#include <cmath>
#include <limits>
#include <vector>

#include "qgs/error.hpp"

namespace qgs {

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
  owns_ = true;
}

BigFloat::BigFloat(double v, Precision prec) : BigFloat(prec) { mpfr_set_d(value_, v, MPFR_RNDN); }

BigFloat::BigFloat(long double v, Precision prec) : BigFloat(prec) { mpfr_set_ld(value_, v, MPFR_RNDN); }

BigFloat::BigFloat(const mpq_class& q, Precision prec) : BigFloat(prec) {
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : BigFloat(o.precision()) { mpfr_set(value_, o.value_, MPFR_RNDN); }

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Steal the limbs; the source is left empty and must not be cleared.
  value_[0] = o.value_[0];
  owns_ = o.owns_;
  o.owns_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    if (!owns_) {
      mpfr_init2(value_, o.precision());
      owns_ = true;
    } else {
      mpfr_set_prec(value_, o.precision());
    }
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    if (owns_) mpfr_clear(value_);
    value_[0] = o.value_[0];
    owns_ = o.owns_;
    o.owns_ = false;
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (owns_) mpfr_clear(value_);
}

double BigFloat::abs_upper() const {
  BigFloat a(precision());
  mpfr_abs(a.value_, value_, MPFR_RNDN);
  return mpfr_get_d(a.value_, MPFR_RNDU);
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

HighPrecComplex HighPrecComplex::conj() const {
  HighPrecComplex out = *this;
  mpfr_neg(out.im.get(), im.get(), MPFR_RNDN);
  return out;
}

double add_up(double a, double b) {
  const double s = a + b;
  if (s == 0 && a == -b) return s;
  return std::nextafter(s, std::numeric_limits<double>::infinity());
}

double mul_up(double a, double b) {
  if (a == 0 || b == 0) return 0;
  const double p = a * b;
  return std::nextafter(p, std::numeric_limits<double>::infinity());
}

namespace {

// Unit roundoff bound 2^(1-prec) for a correctly rounded result at `prec`.
double ulp_factor(Precision prec) { return std::ldexp(1.0, 1 - static_cast<int>(prec)); }

}  // namespace

HighPrecComplex hp_add(const HighPrecComplex& a, const HighPrecComplex& b) {
  const Precision prec = std::max(a.precision(), b.precision());
  HighPrecComplex out(prec);
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  out.err = add_up(add_up(a.err, b.err), mul_up(out.magnitude_upper(), ulp_factor(prec)));
  return out;
}

HighPrecComplex hp_sub(const HighPrecComplex& a, const HighPrecComplex& b) {
  const Precision prec = std::max(a.precision(), b.precision());
  HighPrecComplex out(prec);
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  out.err = add_up(add_up(a.err, b.err), mul_up(out.magnitude_upper(), ulp_factor(prec)));
  return out;
}

HighPrecComplex hp_mul(const HighPrecComplex& a, const HighPrecComplex& b) {
  const Precision prec = std::max(a.precision(), b.precision());
  // Products are formed at double width so only the final sums round.
  const Precision wide = a.precision() + b.precision() + 2;
  BigFloat t1(wide), t2(wide);
  HighPrecComplex out(prec);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  const double ma = a.magnitude_upper();
  const double mb = b.magnitude_upper();
  // |ab - ãb̃| <= |ã|eb + |b̃|ea + ea·eb, plus rounding of the stored result.
  double err = add_up(add_up(mul_up(ma, b.err), mul_up(mb, a.err)), mul_up(a.err, b.err));
  err = add_up(err, mul_up(mul_up(ma, mb), 4.0 * ulp_factor(prec)));
  out.err = err;
  return out;
}

HighPrecComplex hp_scale(const HighPrecComplex& a, const GaussianRational& s) {
  const Precision prec = a.precision();
  HighPrecComplex sc(BigFloat(s.re(), prec + 8), BigFloat(s.im(), prec + 8), 0.0);
  const double s_abs = add_up(std::fabs(s.re().get_d()), std::fabs(s.im().get_d()));
  sc.err = mul_up(s_abs, ulp_factor(prec + 8));
  return hp_mul(a, sc);
}

HighPrecComplex hp_from_long_double(long double re, long double im, double err, Precision prec) {
  HighPrecComplex out(BigFloat(re, prec), BigFloat(im, prec), err);
  return out;
}

double hp_abs_upper(const HighPrecComplex& a) {
  BigFloat m(a.precision());
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return mpfr_get_d(m.get(), MPFR_RNDU);
}

double hp_abs_lower(const HighPrecComplex& a) {
  BigFloat m(a.precision());
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  const double v = mpfr_get_d(m.get(), MPFR_RNDD) - a.err;
  return v > 0 ? std::nextafter(v, 0.0) : 0.0;
}

double hp_distance_upper(const HighPrecComplex& a, const HighPrecComplex& b) {
  const Precision prec = std::max(a.precision(), b.precision()) + 4;
  BigFloat dr(prec), di(prec), m(prec);
  // Differences at the wider of the two precisions plus guard bits are exact
  // whenever the operands are close, which is the regime that matters here.
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_hypot(m.get(), dr.get(), di.get(), MPFR_RNDU);
  const double rounding = mul_up(add_up(a.magnitude_upper(), b.magnitude_upper()), ulp_factor(prec));
  return add_up(mpfr_get_d(m.get(), MPFR_RNDU), rounding);
}

HighPrecComplex cf_to_complex(const ClosedFormValue& v, Precision prec) {
  if (prec < 64) throw Error(ErrorKind::PreconditionViolation, "precision_bits must be >= 64");
  if (v.is_zero()) return HighPrecComplex(prec);

  const SurdValue& s = v.surd();
  const double sqrt_m = std::sqrt(s.radicand().get_d()) + 1.0;
  const double bound = 1.0 + std::fabs(s.rational_part().re().get_d()) + std::fabs(s.rational_part().im().get_d()) +
                       (std::fabs(s.surd_coeff().re().get_d()) + std::fabs(s.surd_coeff().im().get_d())) * sqrt_m;
  const int guard = 16 + static_cast<int>(std::ceil(std::log2(bound)));
  const Precision w = prec + guard;

  BigFloat root(w), a(s.rational_part().re(), w), b(s.rational_part().im(), w);
  BigFloat c(s.surd_coeff().re(), w), d(s.surd_coeff().im(), w);
  mpfr_set_z(root.get(), s.radicand().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
  mpfr_fma(a.get(), c.get(), root.get(), a.get(), MPFR_RNDN);
  mpfr_fma(b.get(), d.get(), root.get(), b.get(), MPFR_RNDN);

  HighPrecComplex out(w);
  if (v.phase().is_identity()) {
    out.re = a;
    out.im = b;
  } else {
    BigFloat angle(w), cs(w), sn(w), t1(w), t2(w);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    BigFloat t(v.phase().value(), w);
    mpfr_mul(angle.get(), angle.get(), t.get(), MPFR_RNDN);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.get(), cs.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.get(), sn.get(), MPFR_RNDN);
    mpfr_sub(out.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.get(), sn.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.get(), cs.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  }
  // Roughly a dozen correctly rounded operations on quantities bounded by `bound`.
  out.err = mul_up(bound, std::ldexp(1.0, -static_cast<int>(w) + 9));
  return out;
}

std::string format_complex(const HighPrecComplex& z, int digits) {
  return z.re.to_string(digits) + (mpfr_signbit(z.im.get()) ? " - " : " + ") +
         [&] {
           BigFloat a(z.im.precision());
           mpfr_abs(a.get(), z.im.get(), MPFR_RNDN);
           return a.to_string(digits);
         }() +
         "i";
}

}  // namespace qgs
