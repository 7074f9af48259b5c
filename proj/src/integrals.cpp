#include "qgs/integrals.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qgs/error.hpp"
#include "qgs/quadrature.hpp"

namespace qgs {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr std::int64_t kMaxZones = 400'000;

long double sgn_pow(std::int64_t n) { return n % 2 == 0 ? 1.0L : -1.0L; }

// Ratios of hyperbolic functions written with decaying exponentials only.
// cosh(x v)/cosh(y v), sinh(x v)/sinh(y v) and so on, for v > 0.
long double cosh_over_cosh(long double x, long double y, long double v) {
  return std::exp((x - y) * v) * (1 + std::exp(-2 * x * v)) / (1 + std::exp(-2 * y * v));
}
long double sinh_over_cosh(long double x, long double y, long double v) {
  return std::exp((x - y) * v) * (1 - std::exp(-2 * x * v)) / (1 + std::exp(-2 * y * v));
}
long double sinh_over_sinh(long double x, long double y, long double v) {
  return std::exp((x - y) * v) * std::expm1(-2 * x * v) / std::expm1(-2 * y * v);
}

cld expi(long double t) { return {std::cos(t), std::sin(t)}; }

std::function<cld(long double)> integrand(const IntegralSpec& sp) {
  const long double a = sp.a, s = sp.s, b = sp.b;
  const long double K = static_cast<long double>(2 * sp.k - 1);
  const long double k = static_cast<long double>(sp.k);
  switch (sp.id) {
    case IntegralId::X6A:
      return [=](long double v) -> cld {
        const long double t = std::atan(1 / v);
        const long double poly = std::pow(v, s) * std::pow(v * v + 1, s / 2);
        const long double val = std::sin(a * v * v) * std::cos(s * t) * cosh_over_cosh(a, kPi * K, v) -
                                std::cos(a * v * v) * std::sin(s * t) * sinh_over_cosh(a, kPi * K, v);
        return poly * val;
      };
    case IntegralId::A1R1:
      return [=](long double v) -> cld { return std::cos(a * v * v) * sinh_over_sinh(2 * a, k * kPi, v); };
    case IntegralId::XY6B:
      return [=](long double v) -> cld { return expi(a * v * v) * cosh_over_cosh(a, K * kPi, v); };
    case IntegralId::C10b:
      return [=](long double v) -> cld { return expi(a * v * v) * sinh_over_sinh(a, 2 * kPi * k, v); };
    case IntegralId::C7A2: {
      const long double cb = std::cosh(2 * kPi * b);
      return [=](long double v) -> cld {
        const long double e1 = std::exp(-2 * kPi * K * v);
        const long double ratio = std::exp((a - kPi * K) * v) * (1 + e1) * (1 + std::exp(-2 * a * v)) /
                                  (2 * (1 + e1 * e1 + 2 * cb * e1));
        return expi(a * v * v) * ratio;
      };
    }
  }
  throw Error(ErrorKind::PreconditionViolation, "unknown integral");
}

// Tail bound for |f| <= 4 (1+v^2)^s e^{-c v} beyond V, valid once V >= 4s/c.
long double tail_bound(long double V, long double s, long double c) {
  return 4 * std::pow(1 + V * V, s) * std::exp(-c * V) * 2 / c;
}

struct MpComplex {
  BigFloat re, im;
  explicit MpComplex(Precision p) : re(0.0, p), im(0.0, p) {}
};

// z += w * e^{i t}
void add_polar(MpComplex& z, const BigFloat& w, const BigFloat& t) {
  const Precision p = z.re.precision();
  BigFloat c(p), s(p), tmp(p);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), w.get(), c.get(), MPFR_RNDN);
  mpfr_add(z.re.get(), z.re.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(tmp.get(), w.get(), s.get(), MPFR_RNDN);
  mpfr_add(z.im.get(), z.im.get(), tmp.get(), MPFR_RNDN);
}

// a * num / den
BigFloat scaled(const BigFloat& a, long num, long den) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.get(), a.get(), num, MPFR_RNDN);
  mpfr_div_si(r.get(), r.get(), den, MPFR_RNDN);
  return r;
}

BigFloat constant(long v, Precision p) { return BigFloat(static_cast<double>(v), p); }

// z *= w * e^{i t}
void mul_polar(MpComplex& z, const BigFloat& w, const BigFloat& t) {
  const Precision p = z.re.precision();
  BigFloat c(p), s(p), x(p), y(p);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  mpfr_mul(x.get(), z.re.get(), c.get(), MPFR_RNDN);
  mpfr_mul(y.get(), z.im.get(), s.get(), MPFR_RNDN);
  mpfr_sub(x.get(), x.get(), y.get(), MPFR_RNDN);
  mpfr_mul(y.get(), z.re.get(), s.get(), MPFR_RNDN);
  mpfr_mul(c.get(), z.im.get(), c.get(), MPFR_RNDN);
  mpfr_add(y.get(), y.get(), c.get(), MPFR_RNDN);
  mpfr_mul(z.re.get(), x.get(), w.get(), MPFR_RNDN);
  mpfr_mul(z.im.get(), y.get(), w.get(), MPFR_RNDN);
}

}  // namespace

std::string to_string(IntegralId id) {
  switch (id) {
    case IntegralId::X6A: return "X6A";
    case IntegralId::A1R1: return "A1R1";
    case IntegralId::XY6B: return "XY6B";
    case IntegralId::C10b: return "C10b";
    case IntegralId::C7A2: return "C7A2";
  }
  return "?";
}

IntegralId integral_id_from_string(const std::string& s) {
  for (IntegralId id : all_integral_ids())
    if (to_string(id) == s) return id;
  throw Error(ErrorKind::Parse, "unknown integral id '" + s + "'");
}

const std::vector<IntegralId>& all_integral_ids() {
  static const std::vector<IntegralId> ids{IntegralId::X6A, IntegralId::A1R1, IntegralId::XY6B, IntegralId::C10b,
                                           IntegralId::C7A2};
  return ids;
}

long double decay_rate(const IntegralSpec& sp) {
  const long double K = static_cast<long double>(2 * sp.k - 1);
  const long double k = static_cast<long double>(sp.k);
  switch (sp.id) {
    case IntegralId::X6A: return kPi * K - sp.a;
    case IntegralId::A1R1: return kPi * k - 2 * sp.a;
    case IntegralId::XY6B: return kPi * K - sp.a;
    case IntegralId::C10b: return 2 * kPi * k - sp.a;
    case IntegralId::C7A2: return kPi * K - sp.a;
  }
  return 0;
}

void check_preconditions(const IntegralSpec& sp) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::PreconditionViolation, to_string(sp.id) + ": " + why);
  };
  if (sp.k < 1) fail("k must be >= 1");
  if (!(sp.a > 0) || !std::isfinite(sp.a)) fail("a must be positive");
  if (sp.id == IntegralId::X6A) {
    if (4 * sp.a > (2 * sp.k - 1) * kPi) fail("requires 4a <= (2k-1)pi");
    if (!(sp.s >= 0 && sp.s <= 4)) fail("s must lie in [0, 4]");
  }
  if (sp.id == IntegralId::C7A2 && !std::isfinite(std::cosh(2 * kPi * sp.b))) fail("b too large");
  if (!(decay_rate(sp) > 0)) fail("integrand does not decay (decay condition on a and k fails)");
}

QuadratureResult eval_integral(const IntegralSpec& sp, double tol) {
  check_preconditions(sp);
  if (!(tol >= 1e-12)) throw Error(ErrorKind::PreconditionViolation, "tolerance must be >= 1e-12");
  const long double c = decay_rate(sp);
  const long double s = sp.id == IntegralId::X6A ? sp.s : 0;
  const long double tail_target = static_cast<long double>(tol) / 100;
  long double V = std::max<long double>(1, 4 * s / c);
  while (tail_bound(V, s, c) > tail_target) V *= 1.05L;

  std::vector<long double> breaks{0};
  for (std::int64_t j = 1;; ++j) {
    const long double z = std::sqrt(j * kPi / sp.a);
    if (z >= V) break;
    if (j > kMaxZones) throw Error(ErrorKind::NonConvergence, "too many oscillation zones");
    breaks.push_back(z);
  }
  breaks.push_back(V);

  QuadratureOptions opt;
  opt.abs_tol = static_cast<long double>(tol) - tail_target;
  const QuadratureSum q = integrate_panels(integrand(sp), breaks, opt);

  QuadratureResult out;
  out.est_error = static_cast<double>(q.est_error + tail_bound(V, s, c));
  out.value = hp_from_long_double(q.value.real(), q.value.imag(), out.est_error);
  out.evaluations = q.evaluations;
  out.cutoff = V;
  return out;
}

HighPrecComplex rhs_sum(const IntegralSpec& sp, Precision prec) {
  check_preconditions(sp);
  const Precision w = prec + 32;
  const BigFloat a(sp.a, w);
  const std::int64_t k = sp.k;
  const long K = static_cast<long>(2 * k - 1);
  MpComplex z(w);
  std::int64_t terms = 0;
  switch (sp.id) {
    case IntegralId::X6A: {
      // ((-1)^{k+1}/K) [sum_{n=1}^{k-1} (-1)^n w_n^s sin(a w_n) + w_0^s sin(a w_0)/2], w_n = (K^2-4n^2)/(4K^2)
      const BigFloat s(sp.s, w);
      for (long n = 0; n < k; ++n) {
        BigFloat wn(w), pw(w), t(w);
        mpfr_set_si(wn.get(), K * K - 4 * n * n, MPFR_RNDN);
        mpfr_div_si(wn.get(), wn.get(), 4 * K * K, MPFR_RNDN);
        mpfr_pow(pw.get(), wn.get(), s.get(), MPFR_RNDN);
        mpfr_mul(t.get(), a.get(), wn.get(), MPFR_RNDN);
        mpfr_sin(t.get(), t.get(), MPFR_RNDN);
        mpfr_mul(t.get(), t.get(), pw.get(), MPFR_RNDN);
        if (n == 0) mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
        if (n % 2 == 1) mpfr_neg(t.get(), t.get(), MPFR_RNDN);
        mpfr_add(z.re.get(), z.re.get(), t.get(), MPFR_RNDN);
        ++terms;
      }
      mpfr_mul_si(z.re.get(), z.re.get(), static_cast<long>(-sgn_pow(k)), MPFR_RNDN);
      mpfr_div_si(z.re.get(), z.re.get(), K, MPFR_RNDN);
      break;
    }
    case IntegralId::A1R1: {
      // ((-1)^{k+1}/k) [sum_{n=1}^{k-1} (-1)^n sin(a(k^2-n^2)/k^2) + sin(a)/2]
      for (long n = 0; n < k; ++n) {
        BigFloat t = scaled(a, static_cast<long>(k * k - n * n), static_cast<long>(k * k));
        mpfr_sin(t.get(), t.get(), MPFR_RNDN);
        if (n == 0) mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
        if (n % 2 == 1) mpfr_neg(t.get(), t.get(), MPFR_RNDN);
        mpfr_add(z.re.get(), z.re.get(), t.get(), MPFR_RNDN);
        ++terms;
      }
      mpfr_mul_si(z.re.get(), z.re.get(), static_cast<long>(-sgn_pow(k)), MPFR_RNDN);
      mpfr_div_si(z.re.get(), z.re.get(), static_cast<long>(k), MPFR_RNDN);
      break;
    }
    case IntegralId::XY6B: {
      // ((-1)^{k+1} e^{ia/4}/K) [1/2 + sum_{n=1}^{k-1} (-1)^n e^{-i a n^2/K^2}]
      for (long n = 0; n < k; ++n) {
        const BigFloat weight = constant(n == 0 ? 1 : (n % 2 == 0 ? 2 : -2), w);
        add_polar(z, weight, scaled(a, -n * n, K * K));
        ++terms;
      }
      mul_polar(z, scaled(constant(1, w), static_cast<long>(-sgn_pow(k)), 2 * K), scaled(a, 1, 4));
      break;
    }
    case IntegralId::C10b: {
      // (i (-1)^k e^{ia/4}/(4k)) sum_{n=1-k}^{k} (-1)^n e^{-i a n^2/(4k^2)}
      for (long n = 1 - static_cast<long>(k); n <= k; ++n) {
        add_polar(z, constant(n % 2 == 0 ? 1 : -1, w), scaled(a, -n * n, static_cast<long>(4 * k * k)));
        ++terms;
      }
      BigFloat turn(w);
      mpfr_const_pi(turn.get(), MPFR_RNDN);
      mpfr_div_ui(turn.get(), turn.get(), 2, MPFR_RNDN);
      mpfr_add(turn.get(), turn.get(), scaled(a, 1, 4).get(), MPFR_RNDN);
      mul_polar(z, scaled(constant(1, w), static_cast<long>(sgn_pow(k)), static_cast<long>(4 * k)), turn);
      break;
    }
    case IntegralId::C7A2: {
      // -1/(4K cosh(pi b)) sum_{n=1}^{2k-1} (-1)^n cosh(X_n) e^{i A_n}
      //   A_n = a(4b^2 - 4n^2 + 1 + 8kn - 4k)/(4K^2),  X_n = 2ab(k-n)/K^2
      const BigFloat b(sp.b, w);
      BigFloat b2(w);
      mpfr_sqr(b2.get(), b.get(), MPFR_RNDN);
      for (long n = 1; n <= 2 * k - 1; ++n) {
        BigFloat An(w), Xn(w);
        mpfr_mul_ui(An.get(), b2.get(), 4, MPFR_RNDN);
        mpfr_add_si(An.get(), An.get(), -4 * n * n + 1 + 8 * static_cast<long>(k) * n - 4 * static_cast<long>(k), MPFR_RNDN);
        mpfr_mul(An.get(), An.get(), a.get(), MPFR_RNDN);
        mpfr_div_si(An.get(), An.get(), 4 * K * K, MPFR_RNDN);
        mpfr_mul(Xn.get(), a.get(), b.get(), MPFR_RNDN);
        mpfr_mul_si(Xn.get(), Xn.get(), 2 * (static_cast<long>(k) - n), MPFR_RNDN);
        mpfr_div_si(Xn.get(), Xn.get(), K * K, MPFR_RNDN);
        mpfr_cosh(Xn.get(), Xn.get(), MPFR_RNDN);
        if (n % 2 == 1) mpfr_neg(Xn.get(), Xn.get(), MPFR_RNDN);
        add_polar(z, Xn, An);
        ++terms;
      }
      BigFloat pre(w);
      mpfr_const_pi(pre.get(), MPFR_RNDN);
      mpfr_mul(pre.get(), pre.get(), b.get(), MPFR_RNDN);
      mpfr_cosh(pre.get(), pre.get(), MPFR_RNDN);
      mpfr_mul_si(pre.get(), pre.get(), -4 * K, MPFR_RNDN);
      mpfr_ui_div(pre.get(), 1, pre.get(), MPFR_RNDN);
      mul_polar(z, pre, BigFloat(0.0, w));
      break;
    }
  }
  HighPrecComplex out(prec);
  mpfr_set(out.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), z.im.get(), MPFR_RNDN);
  // Each term and the final scaling carry a few ulps at the working precision.
  const double mag = 1 + z.re.abs_upper() + z.im.abs_upper();
  out.err = mul_up(mul_up(static_cast<double>(terms + 8), mag), std::ldexp(1.0, -static_cast<int>(prec) + 4));
  return out;
}

nlohmann::json integral_params_json(const IntegralSpec& sp) {
  nlohmann::json j{{"a", static_cast<double>(sp.a)}, {"k", sp.k}};
  if (sp.id == IntegralId::X6A) j["s"] = static_cast<double>(sp.s);
  if (sp.id == IntegralId::C7A2) j["b"] = static_cast<double>(sp.b);
  return j;
}

VerificationRecord check_integral(const IntegralSpec& sp, double tol) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord r;
  r.id = to_string(sp.id);
  r.params.k = sp.k;
  r.params_json = integral_params_json(sp);
  QuadratureResult q = eval_integral(sp, tol);
  r.rhs_value = rhs_sum(sp, 128);
  r.gap = hp_distance_upper(q.value, *r.rhs_value);
  r.bound = add_up(q.est_error, tol);
  r.lhs_value = std::move(q.value);
  r.status = r.gap <= r.bound ? Status::Pass : Status::Fail;
  r.note = "quadrature evaluations " + std::to_string(q.evaluations);
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace qgs
