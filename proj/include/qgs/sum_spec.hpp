#pragma once

// The one description every finite sum in the catalog is written in:
//   sum_{n=lower}^{upper} [(-1)^n] f( pi*(alpha n^2 + beta n + gamma)/delta + 2*pi*theta*n )
// with f one of sin, cos, exp(i·).

#include <cstdint>
#include <string>

#include <json.hpp>

namespace qgs {

enum class SumKind { Sin, Cos, Cexp };

std::string to_string(SumKind kind);
SumKind sum_kind_from_string(const std::string& s);

struct QuadraticArg {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 1;
  std::int64_t theta_num = 0;
  std::int64_t theta_den = 1;

  /// Reduces theta and checks delta > 0; throws PreconditionViolation.
  void normalize();
  bool pure_quadratic() const { return beta == 0 && gamma == 0 && theta_num == 0; }
  friend bool operator==(const QuadraticArg&, const QuadraticArg&) = default;
};

struct SumSpec {
  SumKind kind = SumKind::Cexp;
  bool alternating = false;
  std::int64_t lower = 1;
  std::int64_t upper = 0;
  QuadraticArg arg;

  bool empty() const { return upper < lower; }
  std::int64_t term_count() const { return empty() ? 0 : upper - lower + 1; }

  /// All terms are e^{i*pi*r/D}: D = delta*theta_den, r taken modulo 2D.
  std::int64_t half_modulus() const;

  friend bool operator==(const SumSpec&, const SumSpec&) = default;
};

/// Convenience constructor for the common shape  sum [(-1)^n] f(pi*alpha*n^2/delta).
SumSpec quadratic_sum(SumKind kind, bool alternating, std::int64_t lower, std::int64_t upper, std::int64_t alpha,
                      std::int64_t delta);

/// Same spec with the argument negated (alpha, beta, gamma, theta -> negatives).
SumSpec negated_argument(const SumSpec& s);

/// Residue r(n) in [0, 2D) with term(n) = e^{i*pi*r(n)/D}; the (-1)^n factor is included.
class ResidueMap {
 public:
  explicit ResidueMap(const SumSpec& s);
  std::int64_t half_modulus() const { return half_; }
  std::int64_t modulus() const { return mod_; }
  std::int64_t operator()(std::int64_t n) const;

 private:
  __int128 a_ = 0, b_ = 0, c_ = 0;
  std::int64_t half_ = 1;
  std::int64_t mod_ = 2;
};

nlohmann::json to_json(const SumSpec& s);
SumSpec sum_spec_from_json(const nlohmann::json& j);

std::string describe(const SumSpec& s);

}  // namespace qgs
