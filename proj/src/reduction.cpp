#include "qgs/reduction.hpp"

#include <numeric>
#include <sstream>

#include "qgs/error.hpp"

namespace qgs {

namespace {

bool is_odd(__int128 x) { return (x % 2) != 0; }

// Sign picked up by term(n + shift) relative to term(n) for a pure quadratic
// spec, or 0 when the shift does not move the argument by a multiple of pi.
// pi*alpha*(n+s)^2/delta = pi*alpha*n^2/delta + pi*alpha*(2ns + s^2)/delta.
int shift_sign(const SumSpec& s, std::int64_t shift) {
  const __int128 alpha = s.arg.alpha;
  const __int128 delta = s.arg.delta;
  const __int128 sh = shift;
  if ((2 * alpha * sh) % delta != 0) return 0;
  // Linear part 2*alpha*s*n/delta must be even for every n.
  if (is_odd((2 * alpha * sh) / delta)) return 0;
  if ((alpha * sh * sh) % delta != 0) return 0;
  bool negative = is_odd((alpha * sh * sh) / delta);
  if (s.alternating && is_odd(sh)) negative = !negative;
  return negative ? -1 : 1;
}

}  // namespace

std::int64_t quasi_period(const SumSpec& s) {
  const std::int64_t delta = s.arg.delta;
  return shift_sign(s, delta) == 1 ? delta : 2 * delta;
}

ReductionStep period_reduce(const SumSpec& s) {
  if (!s.arg.pure_quadratic()) {
    throw Error(ErrorKind::UnsupportedShape, "period_reduce needs beta = gamma = 0 and theta = 0");
  }
  ReductionStep step;
  const std::int64_t period = quasi_period(s);
  step.period = period;
  const std::int64_t count = s.term_count();
  const std::int64_t blocks = count / period;
  const std::int64_t rest = count % period;

  std::ostringstream log;
  if (blocks <= 1 && rest == 0) {
    step.multiplier = 1;
    step.base = s;
    log << "range already spans at most one period T=" << period;
    step.description = log.str();
    return step;
  }
  if (blocks == 0) {
    step.multiplier = 1;
    step.base = s;
    log << "range shorter than one period T=" << period;
    step.description = log.str();
    return step;
  }

  // Block b covers n = lower + b*T .. lower + (b+1)*T - 1; shifting it back
  // by b*T collects the sign (-1)^{alt*b*T + alpha*(bT)^2/delta}. With the
  // period chosen above this is (-1)^{p+p^2}-type parity and always +1.
  for (std::int64_t b = 1; b < blocks; ++b) {
    const int sign = shift_sign(s, b * period);
    if (sign != 1) throw Error(ErrorKind::UnsupportedShape, "period shift collected a non-trivial sign");
  }
  if (rest > 0 && shift_sign(s, blocks * period) != 1) {
    throw Error(ErrorKind::UnsupportedShape, "residual shift collected a non-trivial sign");
  }

  step.multiplier = blocks;
  step.base = s;
  step.base.upper = s.lower + period - 1;
  if (rest > 0) {
    SumSpec residual = s;
    residual.upper = s.lower + rest - 1;
    step.residual = residual;
  }
  log << "split " << s.lower << ".." << s.upper << " at multiples of T=" << period << ", shifted " << blocks - 1
      << " block(s) back by multiples of T collecting sign +1";
  if (rest > 0) log << "; residual " << rest << " term(s) shifted back by " << blocks * period;
  step.description = log.str();
  return step;
}

std::pair<SumSpec, SumSpec> split_even_odd(const SumSpec& s) {
  QuadraticArg a = s.arg;
  a.normalize();
  // Full argument pi*P(n)/D with theta folded in.
  const __int128 D = static_cast<__int128>(a.delta) * a.theta_den;
  const __int128 pa = static_cast<__int128>(a.theta_den) * a.alpha;
  const __int128 pb = static_cast<__int128>(a.theta_den) * a.beta + 2 * static_cast<__int128>(a.delta) * a.theta_num;
  const __int128 pc = static_cast<__int128>(a.theta_den) * a.gamma;

  auto build = [&](__int128 na, __int128 nb, __int128 nc, std::int64_t lo, std::int64_t hi) {
    // Reduce the common factor of (na, nb, nc, D).
    __int128 den = D;
    auto g128 = [](__int128 x, __int128 y) {
      if (x < 0) x = -x;
      if (y < 0) y = -y;
      while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
      }
      return x;
    };
    const __int128 g = g128(g128(g128(na, nb), nc), den);
    if (g > 1) {
      na /= g;
      nb /= g;
      nc /= g;
      den /= g;
    }
    const __int128 lim = static_cast<__int128>(1) << 62;
    if (na >= lim || na <= -lim || nb >= lim || nb <= -lim || nc >= lim || nc <= -lim || den >= lim) {
      throw Error(ErrorKind::RangeTooLarge, "split argument overflows 64-bit coefficients");
    }
    SumSpec out;
    out.kind = s.kind;
    out.alternating = false;
    out.lower = lo;
    out.upper = hi;
    out.arg.alpha = static_cast<std::int64_t>(na);
    out.arg.beta = static_cast<std::int64_t>(nb);
    out.arg.gamma = static_cast<std::int64_t>(nc);
    out.arg.delta = static_cast<std::int64_t>(den);
    out.arg.theta_num = 0;
    out.arg.theta_den = 1;
    return out;
  };

  auto floor_div = [](std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  };
  auto ceil_div = [&](std::int64_t x, std::int64_t y) { return -floor_div(-x, y); };

  // n = 2m: P = 4pa m^2 + 2pb m + pc; (-1)^n = +1.
  const std::int64_t even_lo = ceil_div(s.lower, 2);
  const std::int64_t even_hi = floor_div(s.upper, 2);
  SumSpec even = build(4 * pa, 2 * pb, pc, even_lo, even_hi);

  // n = 2m-1: P = 4pa m^2 + (2pb - 4pa) m + (pa - pb + pc); (-1)^n = -1 becomes +pi.
  const std::int64_t odd_lo = ceil_div(s.lower + 1, 2);
  const std::int64_t odd_hi = floor_div(s.upper + 1, 2);
  const __int128 odd_c = pa - pb + pc + (s.alternating ? D : 0);
  SumSpec odd = build(4 * pa, 2 * pb - 4 * pa, odd_c, odd_lo, odd_hi);

  if (s.empty()) {
    even.upper = even.lower - 1;
    odd.upper = odd.lower - 1;
  }
  return {even, odd};
}

}  // namespace qgs
