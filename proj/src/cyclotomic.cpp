#include "qgs/cyclotomic.hpp"

#include <cmath>
#include <numeric>

#include "qgs/error.hpp"

namespace qgs {

CyclotomicElement::CyclotomicElement(std::int64_t order) {
  if (order <= 0) throw Error(ErrorKind::PreconditionViolation, "cyclotomic order must be positive");
  if (order > kCyclotomicOrderCap) {
    throw Error(ErrorKind::OrderTooLarge, "cyclotomic order " + std::to_string(order) + " exceeds cap");
  }
  coeffs_.assign(static_cast<size_t>(order), mpq_class(0));
}

void CyclotomicElement::add_root(std::int64_t r, const mpq_class& coeff) {
  const std::int64_t n = order();
  r %= n;
  if (r < 0) r += n;
  coeffs_[static_cast<size_t>(r)] += coeff;
}

CyclotomicElement CyclotomicElement::lift(std::int64_t new_order) const {
  if (new_order % order() != 0) throw Error(ErrorKind::PreconditionViolation, "lift target is not a multiple");
  CyclotomicElement out(new_order);
  const std::int64_t step = new_order / order();
  for (std::int64_t r = 0; r < order(); ++r) {
    if (sgn(coeffs_[static_cast<size_t>(r)]) != 0) out.coeffs_[static_cast<size_t>(r * step)] = coeffs_[static_cast<size_t>(r)];
  }
  return out;
}

CyclotomicElement CyclotomicElement::conj() const {
  CyclotomicElement out(order());
  for (std::int64_t r = 0; r < order(); ++r) out.add_root(-r, coeffs_[static_cast<size_t>(r)]);
  return out;
}

CyclotomicElement CyclotomicElement::times_i() const {
  if (order() % 4 != 0) throw Error(ErrorKind::PreconditionViolation, "times_i needs order divisible by 4");
  CyclotomicElement out(order());
  const std::int64_t quarter = order() / 4;
  for (std::int64_t r = 0; r < order(); ++r) out.add_root(r + quarter, coeffs_[static_cast<size_t>(r)]);
  return out;
}

CyclotomicElement& CyclotomicElement::operator*=(const mpq_class& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  if (o.order() != order()) throw Error(ErrorKind::PreconditionViolation, "order mismatch");
  for (size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  if (o.order() != order()) throw Error(ErrorKind::PreconditionViolation, "order mismatch");
  for (size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= o.coeffs_[r];
  return *this;
}

bool CyclotomicElement::is_ring_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

CyclotomicElement CyclotomicElement::twice_real_part() const {
  CyclotomicElement out = *this;
  out += conj();
  return out;
}

CyclotomicElement CyclotomicElement::twice_imag_part() const {
  const std::int64_t n = order() % 4 == 0 ? order() : std::lcm(order(), std::int64_t{4});
  CyclotomicElement e = lift(n);
  CyclotomicElement diff = e;
  diff -= e.conj();
  // 2·Im(E) = -i·(E - conj E)
  CyclotomicElement out = diff.times_i();
  out *= -1;
  return out;
}

HighPrecComplex CyclotomicElement::embed(Precision prec) const {
  const Precision w = prec + 16;
  HighPrecComplex out(w);
  BigFloat pi(w), angle(w), sn(w), cs(w), c(w), t(w);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  double weight = 0.0;
  std::int64_t terms = 0;
  for (std::int64_t r = 0; r < order(); ++r) {
    const mpq_class& q = coeffs_[static_cast<size_t>(r)];
    if (sgn(q) == 0) continue;
    mpfr_mul_si(angle.get(), pi.get(), 2 * r, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), order(), MPFR_RNDN);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(c.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t.get(), cs.get(), c.get(), MPFR_RNDN);
    mpfr_add(out.re.get(), out.re.get(), t.get(), MPFR_RNDN);
    mpfr_mul(t.get(), sn.get(), c.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), out.im.get(), t.get(), MPFR_RNDN);
    weight = add_up(weight, std::fabs(q.get_d()) * (1.0 + 1e-15));
    ++terms;
  }
  // Each term is good to a few units in 2^-w relative to its weight; each
  // addition rounds relative to the running total, which is at most `weight`.
  out.err = mul_up(mul_up(weight, static_cast<double>(terms + 8)), std::ldexp(1.0, -static_cast<int>(w) + 6));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<mpz_class>;

// Exact quotient a / b for monic-leading-±1 b dividing a.
Poly exact_divide(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return Poly{0};
  Poly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i] / b[db];
    if (sgn(c) == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly substitute_power(const Poly& p, std::int64_t e) {
  Poly out((p.size() - 1) * static_cast<size_t>(e) + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) out[i * static_cast<size_t>(e)] = p[i];
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::PreconditionViolation, "cyclotomic index must be positive");
  if (n == 1) return {-1, 1};
  // Phi_{rad} by Phi_{mp}(x) = Phi_m(x^p)/Phi_m(x), then Phi_n(x) = Phi_rad(x^{n/rad}).
  Poly phi{-1, 1};
  std::int64_t rad = 1;
  for (std::int64_t p : prime_factors(n)) {
    phi = exact_divide(substitute_power(phi, p), phi);
    rad *= p;
  }
  return substitute_power(phi, n / rad);
}

bool embeds_to_zero(const CyclotomicElement& e) {
  const std::int64_t n = e.order();
  if (n > kExactTestOrderCap) {
    throw Error(ErrorKind::OrderTooLarge, "exact embedding test limited to order " + std::to_string(kExactTestOrderCap));
  }
  if (e.is_ring_zero()) return true;
  const Poly phi = cyclotomic_polynomial(n);
  const size_t deg = phi.size() - 1;
  std::vector<mpq_class> rem = e.coeffs();
  // Phi_N is monic, so long division keeps everything exact.
  std::vector<std::pair<size_t, mpz_class>> sparse;
  for (size_t j = 0; j < deg; ++j) {
    if (sgn(phi[j]) != 0) sparse.emplace_back(j, phi[j]);
  }
  for (size_t i = rem.size(); i-- > deg;) {
    if (sgn(rem[i]) == 0) continue;
    const mpq_class c = rem[i];
    rem[i] = 0;
    for (const auto& [j, pj] : sparse) rem[i - deg + j] -= c * pj;
  }
  for (size_t i = 0; i < deg && i < rem.size(); ++i) {
    if (sgn(rem[i]) != 0) return false;
  }
  return true;
}

CyclotomicElement cyclotomic_sum(const SumSpec& s) {
  if (s.term_count() > kCyclotomicTermCap) {
    throw Error(ErrorKind::RangeTooLarge, "cyclotomic_sum term count exceeds cap");
  }
  const __int128 n = 2 * static_cast<__int128>(s.half_modulus());
  if (n > kCyclotomicOrderCap) throw Error(ErrorKind::OrderTooLarge, "cyclotomic order exceeds cap");
  ResidueMap map(s);
  CyclotomicElement e(map.modulus());
  for (std::int64_t k = s.lower; k <= s.upper; ++k) e.add_root(map(k));
  return e;
}

CyclotomicElement twice_value_element(const SumSpec& s) {
  CyclotomicElement e = cyclotomic_sum(s);
  switch (s.kind) {
    case SumKind::Cos: return e.twice_real_part();
    case SumKind::Sin: return e.twice_imag_part();
    case SumKind::Cexp: e *= 2; return e;
  }
  return e;
}

std::int64_t common_order(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l > kCyclotomicOrderCap) throw Error(ErrorKind::OrderTooLarge, "common cyclotomic order exceeds cap");
  return l;
}

}  // namespace qgs
