#include "qgs/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <queue>
#include <sstream>

#include "qgs/error.hpp"

namespace qgs {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<long double, 15>;
using Gauss = boost::math::quadrature::gauss<long double, 7>;

struct Panel {
  long double a, b;
  cld value;
  long double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel rule(const std::function<cld(long double)>& f, long double a, long double b) {
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const long double c = (a + b) / 2, h = (b - a) / 2;
  const cld f0 = f(c);
  cld k = f0 * wk[0];
  cld g = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const cld s = f(c - h * x[i]) + f(c + h * x[i]);
    k += s * wk[i];
    // Gauss nodes sit at the even Kronrod positions.
    if (i % 2 == 0) g += s * wg[i / 2];
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

constexpr std::int64_t kEvalsPerPanel = 15;

}  // namespace

QuadratureSum integrate_panels(const std::function<cld(long double)>& f, const std::vector<long double>& breaks,
                               const QuadratureOptions& opt) {
  if (breaks.size() < 2) throw Error(ErrorKind::PreconditionViolation, "need at least one panel");
  std::priority_queue<Panel> queue;
  QuadratureSum out;
  long double total_err = 0;
  std::int64_t splits = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Panel p = rule(f, breaks[i], breaks[i + 1]);
    out.evaluations += kEvalsPerPanel;
    total_err += p.err;
    queue.push(p);
  }
  while (total_err > opt.abs_tol) {
    if (out.evaluations + 2 * kEvalsPerPanel > opt.max_evaluations) {
      std::ostringstream msg;
      msg << "evaluation budget " << opt.max_evaluations << " exhausted, error estimate " << static_cast<double>(total_err);
      throw Error(ErrorKind::NonConvergence, msg.str());
    }
    const Panel worst = queue.top();
    queue.pop();
    const long double mid = (worst.a + worst.b) / 2;
    Panel left = rule(f, worst.a, mid);
    Panel right = rule(f, mid, worst.b);
    out.evaluations += 2 * kEvalsPerPanel;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    // The running error drifts through cancellation; resum it now and then.
    if (++splits % 2048 == 0) {
      auto copy = queue;
      total_err = 0;
      while (!copy.empty()) {
        total_err += copy.top().err;
        copy.pop();
      }
    }
  }
  // Sum panels in left-to-right order so the result does not depend on heap layout.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  total_err = 0;
  for (const auto& p : panels) {
    out.value += p.value;
    total_err += p.err;
  }
  out.est_error = total_err;
  return out;
}

}  // namespace qgs
