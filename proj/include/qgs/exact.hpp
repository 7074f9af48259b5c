#pragma once

// Exact value domain of the closed forms: Gaussian rationals, quadratic
// surds over them, and rational-angle phases e^{i*pi*t}.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace qgs {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0);
  GaussianRational(long re) : GaussianRational(mpq_class(re)) {}
  GaussianRational(int re) : GaussianRational(mpq_class(re)) {}

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational frac(long num, long den, long im_num = 0, long im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// rational_part + surd_coeff * sqrt(radicand), radicand squarefree (or 0).
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(GaussianRational rational) : rational_(std::move(rational)) {}

  /// rational + coeff * sqrt(raw_radicand); square factors are pulled out.
  static SurdValue make(GaussianRational rational, GaussianRational coeff, const mpz_class& raw_radicand);
  /// sqrt(q) for a non-negative rational q, as (1/den) * sqrt(num*den).
  static SurdValue sqrt_of(const mpq_class& q);

  const GaussianRational& rational_part() const { return rational_; }
  const GaussianRational& surd_coeff() const { return coeff_; }
  const mpz_class& radicand() const { return radicand_; }

  bool is_zero() const { return rational_.is_zero() && coeff_.is_zero(); }
  bool is_rational() const { return coeff_.is_zero(); }

  SurdValue conj() const;
  SurdValue operator-() const;
  SurdValue& operator*=(const GaussianRational& s);

  /// Throws NotRepresentable when the radicands differ (mixed surds).
  friend SurdValue operator+(const SurdValue& a, const SurdValue& b);
  friend SurdValue operator-(const SurdValue& a, const SurdValue& b) { return a + (-b); }
  /// Throws NotRepresentable unless the product stays a single surd.
  friend SurdValue operator*(const SurdValue& a, const SurdValue& b);
  friend SurdValue operator*(SurdValue a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.radicand_ == b.radicand_ && a.rational_ == b.rational_ && a.coeff_ == b.coeff_;
  }

 private:
  GaussianRational rational_;
  GaussianRational coeff_;
  mpz_class radicand_{0};
};

/// raw = square^2 * squarefree. Trial division up to the cube root of what
/// is left, then a perfect-square test on the remainder.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& raw);

SurdValue surd_normalize(const mpz_class& raw_radicand, const GaussianRational& coeff);

/// The phase e^{i*pi*t}, t kept reduced in [0, 2).
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(mpq_class turns_of_pi);
  RationalAngle(long num, long den) : RationalAngle(mpq_class(num, den)) {}

  const mpq_class& value() const { return t_; }
  mpz_class numerator() const { return t_.get_num(); }
  mpz_class denominator() const { return t_.get_den(); }
  bool is_identity() const { return sgn(t_) == 0; }

  RationalAngle operator-() const { return RationalAngle(-t_); }
  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle(a.t_ + b.t_);
  }
  friend bool operator==(const RationalAngle& a, const RationalAngle& b) { return a.t_ == b.t_; }

 private:
  mpq_class t_{0};
};

/// surd * e^{i*pi*phase}.
class ClosedFormValue {
 public:
  ClosedFormValue() = default;
  ClosedFormValue(SurdValue surd, RationalAngle phase = {});
  ClosedFormValue(GaussianRational q) : ClosedFormValue(SurdValue(std::move(q))) {}
  ClosedFormValue(long q) : ClosedFormValue(GaussianRational(mpq_class(q))) {}

  const SurdValue& surd() const { return surd_; }
  const RationalAngle& phase() const { return phase_; }

  bool is_zero() const { return surd_.is_zero(); }
  /// True when the value is a Gaussian rational (identity phase, no surd).
  bool is_gaussian_rational() const { return surd_.is_rational() && phase_.is_identity(); }

  ClosedFormValue conj() const { return {surd_.conj(), -phase_}; }
  ClosedFormValue operator-() const { return {-surd_, phase_}; }
  friend ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b);
  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b);

  /// "(a + b·i) + (c + d·i)·sqrt(m) * e^(i*pi*p/q)"
  std::string to_string() const;

 private:
  void canonicalize();

  SurdValue surd_;
  RationalAngle phase_;
};

bool cf_equal(const ClosedFormValue& a, const ClosedFormValue& b);

/// Shorthands used throughout the catalog.
inline ClosedFormValue cf_sqrt(long n) { return ClosedFormValue(surd_normalize(n, 1)); }
ClosedFormValue cf_phase(long num, long den);
ClosedFormValue cf_phase(const mpq_class& turns_of_pi);

}  // namespace qgs
