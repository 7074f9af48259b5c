#pragma once

// Thin RAII layer over MPFR plus a complex value with an error radius.

#include <mpfr.h>

#include <string>

#include "qgs/exact.hpp"

namespace qgs {

using Precision = mpfr_prec_t;

class BigFloat {
 public:
  explicit BigFloat(Precision prec = 128);
  BigFloat(double v, Precision prec);
  BigFloat(long double v, Precision prec);
  BigFloat(const mpq_class& q, Precision prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Upper bound on |x| as a double.
  double abs_upper() const;
  /// Decimal text with `digits` significant digits.
  std::string to_string(int digits = 40) const;

 private:
  mpfr_t value_;
  bool owns_ = false;
};

/// re + i·im together with a radius err such that the true value lies in the
/// closed disc of radius err around the stored point.
struct HighPrecComplex {
  BigFloat re;
  BigFloat im;
  double err = 0.0;

  explicit HighPrecComplex(Precision prec = 128) : re(prec), im(prec) {}
  HighPrecComplex(BigFloat r, BigFloat i, double e) : re(std::move(r)), im(std::move(i)), err(e) {}

  Precision precision() const { return re.precision(); }
  /// Upper bound on |re| + |im|.
  double magnitude_upper() const { return re.abs_upper() + im.abs_upper(); }
  HighPrecComplex conj() const;
};

/// Double arithmetic rounded toward +inf, used only for error radii.
double add_up(double a, double b);
double mul_up(double a, double b);

HighPrecComplex hp_add(const HighPrecComplex& a, const HighPrecComplex& b);
HighPrecComplex hp_sub(const HighPrecComplex& a, const HighPrecComplex& b);
HighPrecComplex hp_mul(const HighPrecComplex& a, const HighPrecComplex& b);
HighPrecComplex hp_scale(const HighPrecComplex& a, const GaussianRational& s);
HighPrecComplex hp_from_long_double(long double re, long double im, double err, Precision prec = 128);

/// Upper bound on |a - b| (rounding of the modulus included), without the radii.
double hp_distance_upper(const HighPrecComplex& a, const HighPrecComplex& b);
/// Upper bound on |a|.
double hp_abs_upper(const HighPrecComplex& a);
/// Lower bound on |a| - err, clamped at 0.
double hp_abs_lower(const HighPrecComplex& a);

/// Conversion with err <= 2^(-prec+8)·(1+|v|); zero converts exactly.
HighPrecComplex cf_to_complex(const ClosedFormValue& v, Precision prec);

std::string format_complex(const HighPrecComplex& z, int digits = 40);

}  // namespace qgs
