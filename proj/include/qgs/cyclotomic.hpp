#pragma once

// Exact elements of the group ring Q[x]/(x^N - 1), read as sums of N-th
// roots of unity. Embedding questions (is the complex value zero?) are
// settled exactly by reducing modulo the cyclotomic polynomial Phi_N.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "qgs/bigfloat.hpp"
#include "qgs/exact.hpp"
#include "qgs/sum_spec.hpp"

namespace qgs {

inline constexpr std::int64_t kCyclotomicTermCap = 1'000'000;
inline constexpr std::int64_t kCyclotomicOrderCap = 100'000;
/// Largest order for which the exact embedding test is attempted.
inline constexpr std::int64_t kExactTestOrderCap = 8192;

class CyclotomicElement {
 public:
  explicit CyclotomicElement(std::int64_t order);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& operator[](std::int64_t r) const { return coeffs_[static_cast<size_t>(r)]; }

  /// coeff * zeta_N^r, r taken modulo N.
  void add_root(std::int64_t r, const mpq_class& coeff = 1);
  void add_rational(const mpq_class& q) { add_root(0, q); }

  /// Re-embed into order M (a multiple of N): zeta_N^r = zeta_M^{r*M/N}.
  CyclotomicElement lift(std::int64_t new_order) const;
  CyclotomicElement conj() const;
  /// Multiply by i; requires 4 | N.
  CyclotomicElement times_i() const;
  CyclotomicElement& operator*=(const mpq_class& q);
  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Ring zero (all coefficients vanish). Stronger than a zero embedding.
  bool is_ring_zero() const;

  /// 2·Re and 2·Im of the embedding as ring elements (order lifted to a
  /// multiple of 4 for the imaginary part).
  CyclotomicElement twice_real_part() const;
  CyclotomicElement twice_imag_part() const;

  /// Complex value of the embedding zeta_N = e^{2*pi*i/N}.
  HighPrecComplex embed(Precision prec) const;

 private:
  std::vector<mpq_class> coeffs_;
};

/// Phi_N with integer coefficients, index = power of x.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t n);

/// Exact test that the element maps to 0 under zeta_N -> e^{2*pi*i/N}.
/// Throws OrderTooLarge above kExactTestOrderCap.
bool embeds_to_zero(const CyclotomicElement& e);

/// Element E = sum of e^{i*pi*r(n)/D} over the spec's range, order N = 2D.
/// For Sin/Cos specs the sum is Im(E)/Re(E) respectively.
CyclotomicElement cyclotomic_sum(const SumSpec& s);

/// The element whose embedding equals the spec's value doubled
/// (2·sum for Cexp, E+conj(E) for Cos, -i(E-conj(E)) for Sin).
CyclotomicElement twice_value_element(const SumSpec& s);

/// Smallest common multiple of the orders; throws OrderTooLarge on overflow past the cap.
std::int64_t common_order(std::int64_t a, std::int64_t b);

}  // namespace qgs
