#include "qgs/exact.hpp"

#include "qgs/error.hpp"

#include <sstream>

namespace qgs {

namespace {

std::string rat_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Multiplying by i^q for q in {0,1,2,3}.
GaussianRational times_i_power(const GaussianRational& z, unsigned q) {
  switch (q & 3u) {
    case 0: return z;
    case 1: return {-z.im(), z.re()};
    case 2: return -z;
    default: return {z.im(), -z.re()};
  }
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::frac(long num, long den, long im_num, long im_den) {
  return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorKind::PreconditionViolation, "division by zero Gaussian rational");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  return "(" + rat_text(re_) + " + " + rat_text(im_) + "·i)";
}

// ---------------------------------------------------------------------------

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& raw) {
  if (sgn(raw) < 0) throw Error(ErrorKind::PreconditionViolation, "negative radicand");
  if (raw <= 1) return {1, raw};

  mpz_class rest = raw;
  mpz_class square = 1;
  mpz_class free = 1;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2 == 1) free *= p;
  };

  constexpr unsigned long kTrialLimit = 50'000'000UL;
  strip(2);
  for (unsigned long p = 3;; p += 2) {
    mpz_class cube = mpz_class(p) * p * p;
    if (cube > rest) break;
    if (p > kTrialLimit) throw Error(ErrorKind::NotRepresentable, "radicand too large to factor");
    strip(p);
  }
  // Every prime left in `rest` exceeds its cube root, so rest is 1, p, p*q or p^2.
  if (rest > 1) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    if (root * root == rest) {
      square *= root;
    } else {
      free *= rest;
    }
  }
  return {square, free};
}

SurdValue SurdValue::make(GaussianRational rational, GaussianRational coeff, const mpz_class& raw_radicand) {
  if (sgn(raw_radicand) < 0) throw Error(ErrorKind::PreconditionViolation, "negative radicand");
  SurdValue v;
  v.rational_ = std::move(rational);
  if (coeff.is_zero() || sgn(raw_radicand) == 0) return v;
  auto [square, free] = squarefree_decompose(raw_radicand);
  coeff *= GaussianRational(mpq_class(square));
  if (free == 1) {
    v.rational_ += coeff;
    return v;
  }
  v.coeff_ = std::move(coeff);
  v.radicand_ = free;
  return v;
}

SurdValue SurdValue::sqrt_of(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  if (sgn(q) < 0) throw Error(ErrorKind::PreconditionViolation, "sqrt of negative rational");
  const mpz_class num = q.get_num();
  const mpz_class den = q.get_den();
  return make({}, GaussianRational(mpq_class(1, 1) / mpq_class(den)), num * den);
}

SurdValue surd_normalize(const mpz_class& raw_radicand, const GaussianRational& coeff) {
  return SurdValue::make({}, coeff, raw_radicand);
}

SurdValue SurdValue::conj() const {
  SurdValue v = *this;
  v.rational_ = rational_.conj();
  v.coeff_ = coeff_.conj();
  return v;
}

SurdValue SurdValue::operator-() const {
  SurdValue v = *this;
  v.rational_ = -rational_;
  v.coeff_ = -coeff_;
  return v;
}

SurdValue& SurdValue::operator*=(const GaussianRational& s) {
  rational_ *= s;
  coeff_ *= s;
  if (coeff_.is_zero()) radicand_ = 0;
  return *this;
}

SurdValue operator+(const SurdValue& a, const SurdValue& b) {
  if (a.is_rational()) return SurdValue::make(a.rational_ + b.rational_, b.coeff_, b.radicand_);
  if (b.is_rational()) return SurdValue::make(a.rational_ + b.rational_, a.coeff_, a.radicand_);
  if (a.radicand_ != b.radicand_) {
    throw Error(ErrorKind::NotRepresentable, "sum of surds with radicands " + a.radicand_.get_str() + " and " +
                                                 b.radicand_.get_str());
  }
  return SurdValue::make(a.rational_ + b.rational_, a.coeff_ + b.coeff_, a.radicand_);
}

SurdValue operator*(const SurdValue& a, const SurdValue& b) {
  if (a.is_rational()) return b * a.rational_;
  if (b.is_rational()) return a * b.rational_;
  if (a.radicand_ == b.radicand_) {
    // (r + c√m)(s + d√m) = rs + cd·m + (rd + sc)√m
    GaussianRational rational = a.rational_ * b.rational_ + a.coeff_ * b.coeff_ * GaussianRational(mpq_class(a.radicand_));
    return SurdValue::make(rational, a.rational_ * b.coeff_ + b.rational_ * a.coeff_, a.radicand_);
  }
  if (a.rational_.is_zero() && b.rational_.is_zero()) {
    return SurdValue::make({}, a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
  }
  throw Error(ErrorKind::NotRepresentable, "product of mixed surds");
}

// ---------------------------------------------------------------------------

RationalAngle::RationalAngle(mpq_class turns_of_pi) : t_(std::move(turns_of_pi)) {
  t_.canonicalize();
  // t mod 2 into [0, 2)
  const mpz_class two_den = 2 * t_.get_den();
  mpz_class num = t_.get_num();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), two_den.get_mpz_t());
  t_ = mpq_class(num, t_.get_den());
  t_.canonicalize();
}

ClosedFormValue cf_phase(long num, long den) { return ClosedFormValue(SurdValue(GaussianRational(1)), RationalAngle(num, den)); }

ClosedFormValue cf_phase(const mpq_class& turns_of_pi) {
  return ClosedFormValue(SurdValue(GaussianRational(1)), RationalAngle(turns_of_pi));
}

ClosedFormValue::ClosedFormValue(SurdValue surd, RationalAngle phase) : surd_(std::move(surd)), phase_(std::move(phase)) {
  canonicalize();
}

void ClosedFormValue::canonicalize() {
  if (surd_.is_zero()) {
    phase_ = RationalAngle();
    return;
  }
  // Pull whole quarter turns into the Gaussian coefficients.
  mpq_class t = phase_.value();
  mpz_class quarters;
  const mpq_class twice = 2 * t;
  mpz_fdiv_q(quarters.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  const unsigned q = static_cast<unsigned>(quarters.get_ui());
  if (q != 0) {
    const GaussianRational rot = times_i_power(GaussianRational(1), q);
    surd_ *= rot;
    t -= mpq_class(quarters, 2);
    phase_ = RationalAngle(t);
  }
  // e^{iπ/4} = (1+i)/2·√2 folds into single-surd values.
  if (phase_.value() == mpq_class(1, 4)) {
    const GaussianRational half_one_i = GaussianRational::frac(1, 2, 1, 2);
    if (surd_.is_rational()) {
      surd_ = SurdValue::make({}, surd_.rational_part() * half_one_i, 2);
      phase_ = RationalAngle();
    } else if (surd_.rational_part().is_zero()) {
      surd_ = SurdValue::make({}, surd_.surd_coeff() * half_one_i, 2 * surd_.radicand());
      phase_ = RationalAngle();
    }
  }
}

ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b) {
  return ClosedFormValue(a.surd_ * b.surd_, a.phase_ + b.phase_);
}

bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) {
  return a.surd_ == b.surd_ && a.phase_ == b.phase_;
}

bool cf_equal(const ClosedFormValue& a, const ClosedFormValue& b) { return a == b; }

std::string ClosedFormValue::to_string() const {
  std::ostringstream os;
  os << surd_.rational_part().to_string() << " + " << surd_.surd_coeff().to_string() << "·sqrt("
     << surd_.radicand().get_str() << ") * e^(i*pi*" << phase_.numerator().get_str() << "/"
     << phase_.denominator().get_str() << ")";
  return os.str();
}

}  // namespace qgs
