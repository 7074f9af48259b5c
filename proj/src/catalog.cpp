#include "qgs/catalog.hpp"

#include <algorithm>
#include <map>

#include "qgs/error.hpp"

namespace qgs {

namespace {

using Z = std::int64_t;

// (-1)^n
long sg(Z n) { return (n % 2 == 0) ? 1 : -1; }

mpq_class q(Z num, Z den = 1) {
  mpq_class r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

// rational + coeff*sqrt(radicand)
ClosedFormValue surd(const mpq_class& rational, const mpq_class& coeff, Z radicand) {
  return ClosedFormValue(SurdValue::make(GaussianRational(rational), GaussianRational(coeff), mpz_class(static_cast<long>(radicand))));
}

// coeff*sqrt(radicand)*e^{i*pi*phase}
ClosedFormValue polar(const GaussianRational& coeff, Z radicand, const mpq_class& phase) {
  return ClosedFormValue(SurdValue::make({}, coeff, mpz_class(static_cast<long>(radicand))), RationalAngle(phase));
}

SumSpec sum(SumKind kind, bool alt, Z lo, Z hi, Z a, Z b, Z c, Z d) {
  SumSpec s;
  s.kind = kind;
  s.alternating = alt;
  s.lower = lo;
  s.upper = hi;
  s.arg.alpha = a;
  s.arg.beta = b;
  s.arg.gamma = c;
  s.arg.delta = d;
  return s;
}

SumSpec sq(SumKind kind, bool alt, Z lo, Z hi, Z a, Z d) { return sum(kind, alt, lo, hi, a, 0, 0, d); }

Lhs one(SumSpec s) { return {LhsTerm{ClosedFormValue(1), std::move(s)}}; }

Lhs pair(SumSpec a, long sign, SumSpec b) {
  return {LhsTerm{ClosedFormValue(1), std::move(a)}, LhsTerm{ClosedFormValue(sign), std::move(b)}};
}

RHSExpr closed(ClosedFormValue v) { return RHSExpr{{std::move(v)}, GaussianRational(0), std::nullopt}; }

constexpr auto S = SumKind::Sin;
constexpr auto C = SumKind::Cos;
constexpr auto E = SumKind::Cexp;
constexpr auto K = Param::K;
constexpr auto P = Param::P;
constexpr auto J = Param::J;
constexpr auto M = Param::M;

bool k_odd(const Params& x) { return x.k % 2 != 0; }
bool k_even(const Params& x) { return x.k % 2 == 0; }

// 1 + cos(k*pi/2) -/+ sin(k*pi/2)
long quarter_turn_sum(Z k, long sin_sign) {
  static constexpr long cosv[4] = {1, 0, -1, 0};
  static constexpr long sinv[4] = {0, 1, 0, -1};
  return 1 + cosv[k % 4] + sin_sign * sinv[k % 4];
}

// (1+i)/4 * e^{-i*pi/(4k)} * sqrt(2k) * (1-(-1)^k) * scale
ClosedFormValue odd_gauss_term(Z k, const mpq_class& scale) {
  const GaussianRational c = GaussianRational(1, 1) * GaussianRational(mpq_class(scale * (1 - sg(k)) / 4));
  return polar(c, 2 * k, q(-1, 4 * k));
}

class Builder {
 public:
  IdentityEntry& add(std::string id, char group, std::string family, std::vector<Param> params, std::string lhs_text,
                     std::string rhs_text, std::function<Lhs(const Params&)> lhs,
                     std::function<RHSExpr(const Params&)> rhs) {
    IdentityEntry e;
    e.id = id;
    const auto dot = id.find('.');
    e.base_id = dot == std::string::npos ? id : id.substr(0, dot);
    e.group = group;
    e.family = std::move(family);
    e.params = std::move(params);
    e.lhs_text = std::move(lhs_text);
    e.rhs_text = std::move(rhs_text);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    entries.push_back(std::move(e));
    return entries.back();
  }
  std::vector<IdentityEntry> entries;
};

void group_a(Builder& b) {
  const std::string fam = "alternating quadratic sums";
  b.add("A1", 'A', fam, {K}, "sum_{n=1}^{2k} (-1)^n sin(pi n^2/(4k))", "(-1)^k sqrt(2k)/2",
        [](const Params& x) { return one(sq(S, true, 1, 2 * x.k, 1, 4 * x.k)); },
        [](const Params& x) { return closed(surd(0, q(sg(x.k), 2), 2 * x.k)); });
  b.add("A2", 'A', fam, {K}, "sum_{n=1}^{2k-2} (-1)^n cos(pi n^2/(2(2k-1)))", "-((-1)^k sqrt(2k-1) + 1)/2",
        [](const Params& x) { return one(sq(C, true, 1, 2 * x.k - 2, 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k), 2), 2 * x.k - 1)); });
  b.add("A3", 'A', fam, {K}, "sum_{n=1}^{2k} (-1)^n cos(pi n^2/(4k))", "(-1 + (-1)^k + (-1)^k sqrt(2k))/2",
        [](const Params& x) { return one(sq(C, true, 1, 2 * x.k, 1, 4 * x.k)); },
        [](const Params& x) { return closed(surd(q(sg(x.k) - 1, 2), q(sg(x.k), 2), 2 * x.k)); });
  b.add("A4", 'A', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n sin(pi n^2/(2(2k-1)))", "(-1)^k (1 + sqrt(2k-1))/2",
        [](const Params& x) { return one(sq(S, true, 1, 2 * x.k - 1, 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(sg(x.k), 2), q(sg(x.k), 2), 2 * x.k - 1)); });
  b.add("A5", 'A', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n [cos + sin](pi n^2/(4k-1))", "-1/2 + (-1)^k sqrt(4k-1)/2",
        [](const Params& x) {
          const Z d = 4 * x.k - 1;
          return pair(sq(C, true, 1, 2 * x.k - 1, 1, d), 1, sq(S, true, 1, 2 * x.k - 1, 1, d));
        },
        [](const Params& x) { return closed(surd(q(-1, 2), q(sg(x.k), 2), 4 * x.k - 1)); });
  b.add("A6", 'A', fam, {K}, "sum_{n=1}^{2k-2} (-1)^n [cos - sin](pi n^2/(4k-3))", "-1/2 - (-1)^k sqrt(4k-3)/2",
        [](const Params& x) {
          const Z d = 4 * x.k - 3;
          return pair(sq(C, true, 1, 2 * x.k - 2, 1, d), -1, sq(S, true, 1, 2 * x.k - 2, 1, d));
        },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k), 2), 4 * x.k - 3)); });
  b.add("A7", 'A', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n [cos - sin](pi n^2/(4k-1))", "-1/2 - (-1)^k sqrt(4k-1)/2",
        [](const Params& x) {
          const Z d = 4 * x.k - 1;
          return pair(sq(C, true, 1, 2 * x.k - 1, 1, d), -1, sq(S, true, 1, 2 * x.k - 1, 1, d));
        },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k), 2), 4 * x.k - 1)); });
  b.add("A8", 'A', fam, {K}, "sum_{n=1}^{2k-2} (-1)^n [cos + sin](pi n^2/(4k-3))", "-1/2 - (-1)^k sqrt(4k-3)/2",
        [](const Params& x) {
          const Z d = 4 * x.k - 3;
          return pair(sq(C, true, 1, 2 * x.k - 2, 1, d), 1, sq(S, true, 1, 2 * x.k - 2, 1, d));
        },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k), 2), 4 * x.k - 3)); });
  b.add("A9", 'A', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n cos(pi n^2/(4k-1))", "-1/2",
        [](const Params& x) { return one(sq(C, true, 1, 2 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params&) { return closed(ClosedFormValue(GaussianRational(q(-1, 2)))); });
  b.add("A10", 'A', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n sin(pi n^2/(4k-1))", "(-1)^k sqrt(4k-1)/2",
        [](const Params& x) { return one(sq(S, true, 1, 2 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params& x) { return closed(surd(0, q(sg(x.k), 2), 4 * x.k - 1)); });
  b.add("A11", 'A', fam, {K}, "sum_{n=1}^{2k-2} (-1)^n cos(pi n^2/(4k-3))", "-1/2 - (-1)^k sqrt(4k-3)/2",
        [](const Params& x) { return one(sq(C, true, 1, 2 * x.k - 2, 1, 4 * x.k - 3)); },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k), 2), 4 * x.k - 3)); });
  b.add("A12", 'A', fam, {K}, "sum_{n=1}^{2k-2} (-1)^n sin(pi n^2/(4k-3))", "0",
        [](const Params& x) { return one(sq(S, true, 1, 2 * x.k - 2, 1, 4 * x.k - 3)); },
        [](const Params&) { return closed(ClosedFormValue(0)); });
  b.add("A13", 'A', fam, {K}, "sum_{n=1}^{4k-1} (-1)^n cos(pi n^2/(4k-1))", "0",
        [](const Params& x) { return one(sq(C, true, 1, 4 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params&) { return closed(ClosedFormValue(0)); });
  b.add("A14", 'A', fam, {K}, "sum_{n=1}^{4k-1} (-1)^n sin(pi n^2/(4k-1))", "(-1)^k sqrt(4k-1)",
        [](const Params& x) { return one(sq(S, true, 1, 4 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params& x) { return closed(surd(0, sg(x.k), 4 * x.k - 1)); });
  b.add("A15", 'A', fam, {K}, "sum_{n=1}^{4k-3} (-1)^n cos(pi n^2/(4k-3))", "-(-1)^k sqrt(4k-3)",
        [](const Params& x) { return one(sq(C, true, 1, 4 * x.k - 3, 1, 4 * x.k - 3)); },
        [](const Params& x) { return closed(surd(0, -sg(x.k), 4 * x.k - 3)); });
  b.add("A16", 'A', fam, {K}, "sum_{n=1}^{4k-3} (-1)^n sin(pi n^2/(4k-3))", "0",
        [](const Params& x) { return one(sq(S, true, 1, 4 * x.k - 3, 1, 4 * x.k - 3)); },
        [](const Params&) { return closed(ClosedFormValue(0)); });
}

void group_b(Builder& b) {
  const std::string fam = "odd-index and symmetric-range variations";
  // (2n-1)(4k-2n-1) = -4n^2 + 8kn + 1 - 4k
  for (SumKind kind : {S, C}) {
    const std::string f = kind == S ? "sin" : "cos";
    b.add("B1." + f, 'B', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n " + f + "(pi (2n-1)(4k-2n-1)/(4(2k-1)))",
          "-sqrt(k - 1/2)",
          [kind](const Params& x) { return one(sum(kind, true, 1, 2 * x.k - 1, -4, 8 * x.k, 1 - 4 * x.k, 4 * (2 * x.k - 1))); },
          [](const Params& x) { return closed(ClosedFormValue(-SurdValue::sqrt_of(q(2 * x.k - 1, 2)))); })
        .cross_check = "B1";
  }
  for (SumKind kind : {S, C}) {
    const std::string f = kind == S ? "sin" : "cos";
    b.add("B2." + f, 'B', fam, {K}, "sum_{n=1}^{2k-1} " + f + "(pi (2n-1)^2/(4(2k-1)))", "sqrt(k - 1/2)",
          [kind](const Params& x) { return one(sum(kind, false, 1, 2 * x.k - 1, 4, -4, 1, 4 * (2 * x.k - 1))); },
          [](const Params& x) { return closed(ClosedFormValue(SurdValue::sqrt_of(q(2 * x.k - 1, 2)))); })
        .cross_check = "B2";
  }
  b.add("B3", 'B', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n cos(pi (-2n^2 + 4kn - k)/(2(2k-1)))", "0",
        [](const Params& x) { return one(sum(C, true, 1, 2 * x.k - 1, -2, 4 * x.k, -x.k, 2 * (2 * x.k - 1))); },
        [](const Params&) { return closed(ClosedFormValue(0)); })
      .cross_check = "B3/B4";
  b.add("B4.sin", 'B', fam, {K}, "sum_{n=-2k}^{2k} (-1)^n sin(pi n^2/(4k+1))", "0",
        [](const Params& x) { return one(sq(S, true, -2 * x.k, 2 * x.k, 1, 4 * x.k + 1)); },
        [](const Params&) { return closed(ClosedFormValue(0)); })
      .cross_check = "B3/B4";
  b.add("B4.cos", 'B', fam, {K}, "sum_{n=1-2k}^{2k-1} (-1)^n cos(pi n^2/(4k-1))", "0",
        [](const Params& x) { return one(sq(C, true, 1 - 2 * x.k, 2 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params&) { return closed(ClosedFormValue(0)); })
      .cross_check = "B3/B4";
  b.add("B5", 'B', fam, {K}, "sum_{n=1}^{2k-1} (-1)^n sin(pi (-2n^2 + 4kn - k)/(2(2k-1)))", "-sqrt(2k-1)",
        [](const Params& x) { return one(sum(S, true, 1, 2 * x.k - 1, -2, 4 * x.k, -x.k, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(0, -1, 2 * x.k - 1)); })
      .cross_check = "B5/B6/B7";
  b.add("B6", 'B', fam, {K}, "sum_{n=-2k}^{2k} (-1)^n cos(pi n^2/(4k+1))", "(-1)^k sqrt(4k+1)",
        [](const Params& x) { return one(sq(C, true, -2 * x.k, 2 * x.k, 1, 4 * x.k + 1)); },
        [](const Params& x) { return closed(surd(0, sg(x.k), 4 * x.k + 1)); })
      .cross_check = "B5/B6/B7";
  b.add("B7", 'B', fam, {K}, "sum_{n=1-2k}^{2k-1} (-1)^n sin(pi n^2/(4k-1))", "(-1)^k sqrt(4k-1)",
        [](const Params& x) { return one(sq(S, true, 1 - 2 * x.k, 2 * x.k - 1, 1, 4 * x.k - 1)); },
        [](const Params& x) { return closed(surd(0, sg(x.k), 4 * x.k - 1)); })
      .cross_check = "B5/B6/B7";
  for (SumKind kind : {S, C}) {
    const std::string f = kind == S ? "sin" : "cos";
    b.add("B8." + f, 'B', fam, {K}, "sum_{n=-2k}^{2k} " + f + "(pi (2n+1)^2/(4(4k+1)))", "sqrt(8k+2)/2",
          [kind](const Params& x) { return one(sum(kind, false, -2 * x.k, 2 * x.k, 4, 4, 1, 4 * (4 * x.k + 1))); },
          [](const Params& x) { return closed(surd(0, q(1, 2), 8 * x.k + 2)); })
        .cross_check = "B8";
  }
  const std::string tab = "full-period sums tabulated by k mod 4";
  b.add("B9", 'B', tab, {K}, "sum_{n=1}^{k} sin(2 pi n^2/k)", "(sqrt(k)/2)(1 + cos(k pi/2) - sin(k pi/2))",
        [](const Params& x) { return one(sq(S, false, 1, x.k, 2, x.k)); },
        [](const Params& x) { return closed(surd(0, q(quarter_turn_sum(x.k, -1), 2), x.k)); });
  b.add("B10", 'B', tab, {K}, "sum_{n=1}^{k} cos(2 pi n^2/k)", "(sqrt(k)/2)(1 + cos(k pi/2) + sin(k pi/2))",
        [](const Params& x) { return one(sq(C, false, 1, x.k, 2, x.k)); },
        [](const Params& x) { return closed(surd(0, q(quarter_turn_sum(x.k, 1), 2), x.k)); });
}

void group_c(Builder& b) {
  const std::string fam = "even/odd index splitting";
  b.add("C1", 'C', fam, {K}, "sum_{n=0}^{k} sin(pi n^2/k)", "sqrt(2k)(1 + (-1)^k)/4",
        [](const Params& x) { return one(sq(S, false, 0, x.k, 1, x.k)); },
        [](const Params& x) { return closed(surd(0, q(1 + sg(x.k), 4), 2 * x.k)); });
  {
    auto& e = b.add("C2.even", 'C', fam, {K}, "sum_{n=1}^{k} cos(pi n^2/k)", "sqrt(2k)/2",
                    [](const Params& x) { return one(sq(C, false, 1, x.k, 1, x.k)); },
                    [](const Params& x) { return closed(surd(0, q(1, 2), 2 * x.k)); });
    e.validity_text = "k even";
    e.validity = k_even;
  }
  {
    auto& e = b.add("C2.odd", 'C', fam, {K}, "sum_{n=1}^{k} cos(pi n^2/k)", "-1",
                    [](const Params& x) { return one(sq(C, false, 1, x.k, 1, x.k)); },
                    [](const Params&) { return closed(ClosedFormValue(-1)); });
    e.validity_text = "k odd";
    e.validity = k_odd;
  }
  for (SumKind kind : {S, C}) {
    const std::string f = kind == S ? "sin" : "cos";
    b.add("C3." + f, 'C', fam, {K}, "sum_{n=1}^{k} " + f + "(pi (2n-1)^2/(4k))", "-sqrt(2k)((-1)^k - 1)/4",
          [kind](const Params& x) { return one(sum(kind, false, 1, x.k, 4, -4, 1, 4 * x.k)); },
          [](const Params& x) { return closed(surd(0, q(1 - sg(x.k), 4), 2 * x.k)); })
        .cross_check = "C3";
  }
  // Even and odd halves of the A1 and A3 sums.
  {
    auto& e = b.add("C4", 'C', fam, {K}, "sum_{n=0}^{k} sin(pi n^2/k) - sum_{n=1}^{k} sin(pi (2n-1)^2/(4k))",
                    "(-1)^k sqrt(2k)/2",
                    [](const Params& x) {
                      return pair(sq(S, false, 0, x.k, 1, x.k), -1, sum(S, false, 1, x.k, 4, -4, 1, 4 * x.k));
                    },
                    [](const Params& x) { return closed(surd(0, q(sg(x.k), 2), 2 * x.k)); });
    e.derived = true;
    e.cross_check = "C1/C3/A1";
  }
  {
    auto& e = b.add("C5", 'C', fam, {K}, "sum_{n=1}^{k} cos(pi n^2/k) - sum_{n=1}^{k} cos(pi (2n-1)^2/(4k))",
                    "(-1 + (-1)^k + (-1)^k sqrt(2k))/2",
                    [](const Params& x) {
                      return pair(sq(C, false, 1, x.k, 1, x.k), -1, sum(C, false, 1, x.k, 4, -4, 1, 4 * x.k));
                    },
                    [](const Params& x) { return closed(surd(q(sg(x.k) - 1, 2), q(sg(x.k), 2), 2 * x.k)); });
    e.derived = true;
    e.cross_check = "C2/C3/A3";
  }
}

void group_d(Builder& b) {
  const std::string fam = "upper limit stretched by p periods";
  auto add = [&](std::string id, std::string lhs_text, std::string rhs_text, std::function<Lhs(const Params&)> l,
                 std::function<RHSExpr(const Params&)> r) {
    b.add(std::move(id), 'D', fam, {K, P}, std::move(lhs_text), std::move(rhs_text), std::move(l), std::move(r))
        .p_zero_ok = true;
  };
  add("D1", "sum_{n=1}^{4kp} (-1)^n sin(pi n^2/(4k))", "p (-1)^k sqrt(2k)",
      [](const Params& x) { return one(sq(S, true, 1, 4 * x.k * x.p, 1, 4 * x.k)); },
      [](const Params& x) { return closed(surd(0, q(x.p * sg(x.k)), 2 * x.k)); });
  add("D2", "sum_{n=1}^{2(2k-1)p} (-1)^n sin(pi n^2/(2(2k-1)))", "(-1)^k p sqrt(2k-1)",
      [](const Params& x) { return one(sq(S, true, 1, 2 * (2 * x.k - 1) * x.p, 1, 2 * (2 * x.k - 1))); },
      [](const Params& x) { return closed(surd(0, q(x.p * sg(x.k)), 2 * x.k - 1)); });
  add("D3", "sum_{n=1}^{(4k-1)p} (-1)^n sin(pi n^2/(4k-1))", "(-1)^k p sqrt(4k-1)",
      [](const Params& x) { return one(sq(S, true, 1, (4 * x.k - 1) * x.p, 1, 4 * x.k - 1)); },
      [](const Params& x) { return closed(surd(0, q(x.p * sg(x.k)), 4 * x.k - 1)); });
  add("D4", "sum_{n=1}^{(4k-3)p} (-1)^n sin(pi n^2/(4k-3))", "0",
      [](const Params& x) { return one(sq(S, true, 1, (4 * x.k - 3) * x.p, 1, 4 * x.k - 3)); },
      [](const Params&) { return closed(ClosedFormValue(0)); });
  add("D5", "sum_{n=1}^{2(2k-1)p} (-1)^n cos(pi n^2/(2(2k-1)))", "-(-1)^k p sqrt(2k-1)",
      [](const Params& x) { return one(sq(C, true, 1, 2 * (2 * x.k - 1) * x.p, 1, 2 * (2 * x.k - 1))); },
      [](const Params& x) { return closed(surd(0, q(-x.p * sg(x.k)), 2 * x.k - 1)); });
  add("D6", "sum_{n=1}^{4kp} (-1)^n cos(pi n^2/(4k))", "p (-1)^k sqrt(2k)",
      [](const Params& x) { return one(sq(C, true, 1, 4 * x.k * x.p, 1, 4 * x.k)); },
      [](const Params& x) { return closed(surd(0, q(x.p * sg(x.k)), 2 * x.k)); });
  add("D7", "sum_{n=1}^{(4k-1)p} (-1)^n cos(pi n^2/(4k-1))", "0",
      [](const Params& x) { return one(sq(C, true, 1, (4 * x.k - 1) * x.p, 1, 4 * x.k - 1)); },
      [](const Params&) { return closed(ClosedFormValue(0)); });
  add("D8", "sum_{n=1}^{(4k-3)p} (-1)^n cos(pi n^2/(4k-3))", "-(-1)^k p sqrt(4k-3)",
      [](const Params& x) { return one(sq(C, true, 1, (4 * x.k - 3) * x.p, 1, 4 * x.k - 3)); },
      [](const Params& x) { return closed(surd(0, q(-x.p * sg(x.k)), 4 * x.k - 3)); });
}

void group_e(Builder& b) {
  const std::string fam = "auxiliary sums with half and stretched ranges";
  b.add("E1", 'E', fam, {K}, "sum_{n=1}^{2k-1} cos(pi n^2/(2(2k-1)))", "(sqrt(2k-1) - 1)/2",
        [](const Params& x) { return one(sq(C, false, 1, 2 * x.k - 1, 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(-1, 2), q(1, 2), 2 * x.k - 1)); });
  b.add("E2", 'E', fam, {K}, "sum_{n=1}^{2k} cos(pi n^2/(4k))", "(sqrt(2k) + (-1)^k - 1)/2",
        [](const Params& x) { return one(sq(C, false, 1, 2 * x.k, 1, 4 * x.k)); },
        [](const Params& x) { return closed(surd(q(sg(x.k) - 1, 2), q(1, 2), 2 * x.k)); });
  b.add("E3.disp", 'E', fam, {K}, "sum_{n=1}^{2k-1} sin(pi n^2/(2(2k-1)))", "sqrt(2k-1)/2 - (-1)^k/2",
        [](const Params& x) { return one(sq(S, false, 1, 2 * x.k - 1, 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(-sg(x.k), 2), q(1, 2), 2 * x.k - 1)); })
      .cross_check = "E3";
  b.add("E3.src", 'E', fam, {K}, "sum_{n=1}^{2k-2} sin(pi n^2/(2(2k-1)))", "sqrt(2k-1)/2 + (-1)^k/2",
        [](const Params& x) { return one(sq(S, false, 1, 2 * x.k - 2, 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(sg(x.k), 2), q(1, 2), 2 * x.k - 1)); })
      .cross_check = "E3";
  auto add_p = [&](std::string id, std::string lhs_text, std::string rhs_text, std::function<Lhs(const Params&)> l,
                   std::function<RHSExpr(const Params&)> r, bool p_zero_ok) {
    b.add(std::move(id), 'E', fam, {K, P}, std::move(lhs_text), std::move(rhs_text), std::move(l), std::move(r))
        .p_zero_ok = p_zero_ok;
  };
  add_p("E4", "sum_{n=1}^{p(2k-1)} sin(pi (2n-1)^2/(4(2k-1)))", "p sqrt(4k-2)/2",
        [](const Params& x) { return one(sum(S, false, 1, x.p * (2 * x.k - 1), 4, -4, 1, 4 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(0, q(x.p, 2), 4 * x.k - 2)); }, true);
  add_p("E5", "sum_{n=1}^{pk} sin(2 pi n^2/k)", "(p sqrt(k)/2)(1 + cos(k pi/2) - sin(k pi/2))",
        [](const Params& x) { return one(sq(S, false, 1, x.p * x.k, 2, x.k)); },
        [](const Params& x) { return closed(surd(0, q(x.p * quarter_turn_sum(x.k, -1), 2), x.k)); }, true);
  add_p("E6", "sum_{n=1}^{2pk} (-1)^n sin(pi n^2/(4k))", "p (-1)^k sqrt(2k)/2",
        [](const Params& x) { return one(sq(S, true, 1, 2 * x.p * x.k, 1, 4 * x.k)); },
        [](const Params& x) { return closed(surd(0, q(x.p * sg(x.k), 2), 2 * x.k)); }, true);
  add_p("E7", "sum_{n=1}^{p(2k-1)} (-1)^n cos(pi n^2/(2(2k-1)))", "-(1 - (-1)^p)/4 - (-1)^k p sqrt(2k-1)/2",
        [](const Params& x) { return one(sq(C, true, 1, x.p * (2 * x.k - 1), 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(sg(x.p) - 1, 4), q(-sg(x.k) * x.p, 2), 2 * x.k - 1)); }, true);
  add_p("E8", "sum_{n=1}^{2pk} (-1)^n cos(pi n^2/(4k))", "p (-1)^k sqrt(2k)/2 - (1 - (-1)^{pk})/2",
        [](const Params& x) { return one(sq(C, true, 1, 2 * x.p * x.k, 1, 4 * x.k)); },
        [](const Params& x) { return closed(surd(q(sg(x.p * x.k) - 1, 2), q(x.p * sg(x.k), 2), 2 * x.k)); }, true);
  add_p("E9", "sum_{n=1}^{p(2k-1)} (-1)^n sin(pi n^2/(2(2k-1)))", "(-1)^k (1 + 2p sqrt(2k-1) - (-1)^p)/4",
        [](const Params& x) { return one(sq(S, true, 1, x.p * (2 * x.k - 1), 1, 2 * (2 * x.k - 1))); },
        [](const Params& x) { return closed(surd(q(sg(x.k) * (1 - sg(x.p)), 4), q(sg(x.k) * x.p, 2), 2 * x.k - 1)); },
        true);
  add_p("E10", "sum_{n=1}^{p(4k-1)-2k} (-1)^n cos(pi n^2/(4k-1))", "-1/2",
        [](const Params& x) { return one(sq(C, true, 1, x.p * (4 * x.k - 1) - 2 * x.k, 1, 4 * x.k - 1)); },
        [](const Params&) { return closed(ClosedFormValue(GaussianRational(q(-1, 2)))); }, false);
  add_p("E11", "sum_{n=1}^{p(4k-3)-2k+1} (-1)^n cos(pi n^2/(4k-3))", "-1/2 - (-1)^k sqrt(4k-3)(p - 1/2)",
        [](const Params& x) { return one(sq(C, true, 1, x.p * (4 * x.k - 3) - 2 * x.k + 1, 1, 4 * x.k - 3)); },
        [](const Params& x) { return closed(surd(q(-1, 2), q(-sg(x.k) * (2 * x.p - 1), 2), 4 * x.k - 3)); }, false);
  add_p("E12", "sum_{n=1}^{p(4k-1)-2k} (-1)^n sin(pi n^2/(4k-1))", "(-1)^k (p - 1/2) sqrt(4k-1)",
        [](const Params& x) { return one(sq(S, true, 1, x.p * (4 * x.k - 1) - 2 * x.k, 1, 4 * x.k - 1)); },
        [](const Params& x) { return closed(surd(0, q(sg(x.k) * (2 * x.p - 1), 2), 4 * x.k - 1)); }, false);
}

void group_f(Builder& b) {
  const std::string fam = "extended exponential Gauss sums";
  b.add("F1", 'F', fam, {K}, "sum_{n=1}^{k} exp(2 pi i n^2/k)", "(sqrt(k)/2)(1+i)(1 + e^{-i pi k/2})",
        [](const Params& x) { return one(sq(E, false, 1, x.k, 2, x.k)); },
        [](const Params& x) {
          static const GaussianRational powers[4] = {1, -GaussianRational::i(), -1, GaussianRational::i()};
          const GaussianRational c = GaussianRational(1, 1) * (GaussianRational(1) + powers[x.k % 4]) * GaussianRational(q(1, 2));
          return closed(ClosedFormValue(SurdValue::make({}, c, mpz_class(static_cast<long>(x.k)))));
        });
  {
    auto& e = b.add("F2", 'F', fam, {K, P}, "sum_{n=1}^{pk} (-1)^n exp(i pi n^2/k)",
                    "p sqrt(k) exp(i pi (1/4 + floor(k/4) - (k mod 4)/4))",
                    [](const Params& x) { return one(sq(E, true, 1, x.p * x.k, 1, x.k)); },
                    [](const Params& x) {
                      return closed(polar(GaussianRational(q(x.p)), x.k, q(1 + 4 * (x.k / 4) - x.k % 4, 4)));
                    });
    e.p_zero_ok = true;
  }
  b.add("F3", 'F', fam, {K, P}, "sum_{n=1}^{pk} exp(i pi (2n-1)^2/(4k))", "(1+i) p sqrt(2k)(1 - (-1)^k)/4",
        [](const Params& x) { return one(sum(E, false, 1, x.p * x.k, 4, -4, 1, 4 * x.k)); },
        [](const Params& x) {
          const GaussianRational c = GaussianRational(1, 1) * GaussianRational(q(x.p * (1 - sg(x.k)), 4));
          return closed(ClosedFormValue(SurdValue::make({}, c, mpz_class(static_cast<long>(2 * x.k)))));
        })
      .p_zero_ok = true;
  b.add("F4", 'F', fam, {K, M}, "sum_{n=0}^{2k-1} exp(i pi (n-m)^2/(2k))", "sqrt(2k i)",
        [](const Params& x) { return one(sum(E, false, 0, 2 * x.k - 1, 1, -2 * x.m, x.m * x.m, 2 * x.k)); },
        [](const Params& x) { return closed(polar(1, 2 * x.k, q(1, 4))); });
  {
    auto& e = b.add("F5", 'F', fam, {K}, "sum_{n=0}^{k-1} exp(i pi (n-1/2)^2/k)", "sqrt(i k)",
                    [](const Params& x) { return one(sum(E, false, 0, x.k - 1, 4, -4, 1, 4 * x.k)); },
                    [](const Params& x) { return closed(polar(1, x.k, q(1, 4))); });
    e.validity_text = "k odd";
    e.validity = k_odd;
    e.negative_outside_validity = true;
  }
  b.add("F6", 'F', fam, {K, P}, "sum_{n=1}^{pk} exp(i pi (n^2-n)/k)", "(1+i)/4 e^{-i pi/(4k)} p sqrt(2k)(1 - (-1)^k)",
        [](const Params& x) { return one(sum(E, false, 1, x.p * x.k, 1, -1, 0, x.k)); },
        [](const Params& x) { return closed(odd_gauss_term(x.k, q(x.p))); })
      .p_zero_ok = true;
  b.add("F7", 'F', fam, {K, P}, "sum_{n=0}^{p(k-1)} exp(i pi (n^2-n)/k)",
        "(p/4)(1+i) e^{-i pi/(4k)} sqrt(2k)(1 - (-1)^k) + 1 - (-1)^{p^2 k + p} sum_{n=1}^{p} exp(i pi n(n-1)/k)",
        [](const Params& x) { return one(sum(E, false, 0, x.p * (x.k - 1), 1, -1, 0, x.k)); },
        [](const Params& x) {
          RHSExpr r;
          r.closed = {odd_gauss_term(x.k, q(x.p)), ClosedFormValue(1)};
          r.residual_scale = GaussianRational(-sg(x.p * x.p * x.k + x.p));
          r.residual = sum(E, false, 1, x.p, 1, -1, 0, x.k);
          return r;
        })
      .p_zero_ok = true;
  {
    auto& e = b.add("F8", 'F', fam, {K}, "sum_{n=0}^{k-1} exp(i pi (n^2-n)/k)", "(1/2)(1+i) e^{-i pi/(4k)} sqrt(2k)",
                    [](const Params& x) { return one(sum(E, false, 0, x.k - 1, 1, -1, 0, x.k)); },
                    [](const Params& x) { return closed(polar(GaussianRational(q(1, 2), q(1, 2)), 2 * x.k, q(-1, 4 * x.k))); });
    e.validity_text = "k odd";
    e.validity = k_odd;
    e.negative_outside_validity = true;
  }
  {
    auto& e = b.add(
        "F9", 'F', "quadratic reciprocity of exponential sums", {J, K, M},
        "sqrt(j) sum_{n=0}^{k-1} exp(i pi (j n^2 + m n)/k) - sqrt(k) e^{i pi (jk - m^2)/(4jk)} sum_{n=0}^{j-1} exp(-i pi (k n^2 + m n)/j)",
        "0",
        [](const Params& x) {
          const mpq_class phase{mpz_class(static_cast<long>(x.j * x.k - x.m * x.m)), mpz_class(static_cast<long>(4 * x.j * x.k))};
          Lhs l;
          l.push_back({polar(1, x.j, 0), sum(E, false, 0, x.k - 1, x.j, x.m, 0, x.k)});
          l.push_back({polar(-1, x.k, phase), sum(E, false, 0, x.j - 1, -x.k, -x.m, 0, x.j)});
          return l;
        },
        [](const Params&) { return closed(ClosedFormValue(0)); });
    e.validity_text = "jk+m even";
    e.validity = [](const Params& x) { return (x.j * x.k + x.m) % 2 == 0; };
    e.negative_outside_validity = true;
  }
  b.add("F10", 'F', fam, {K, P}, "sum_{n=0}^{pk(k-1)} exp(i pi (n^2-n)/k)",
        "1 + (p/4)(1+i) e^{-i pi/(4k)} sqrt(2k)(k-1)(1 - (-1)^k)",
        [](const Params& x) { return one(sum(E, false, 0, x.p * x.k * (x.k - 1), 1, -1, 0, x.k)); },
        [](const Params& x) {
          RHSExpr r;
          r.closed = {ClosedFormValue(1), odd_gauss_term(x.k, q(x.p * (x.k - 1)))};
          return r;
        })
      .p_zero_ok = true;
  b.add("F11", 'F', fam, {K, P}, "sum_{n=0}^{p(k-1)^2} exp(i pi n(n-1)/k)",
        "1 + sum_{n=1}^{p} exp(i pi n(n-1)/k) + (1/4)(1+i)(k-2) p sqrt(2k) e^{-i pi/(4k)}(1 - (-1)^k)",
        [](const Params& x) { return one(sum(E, false, 0, x.p * (x.k - 1) * (x.k - 1), 1, -1, 0, x.k)); },
        [](const Params& x) {
          RHSExpr r;
          r.closed = {ClosedFormValue(1), odd_gauss_term(x.k, q(x.p * (x.k - 2)))};
          r.residual_scale = GaussianRational(1);
          r.residual = sum(E, false, 1, x.p, 1, -1, 0, x.k);
          return r;
        })
      .p_zero_ok = true;
}

std::vector<IdentityEntry> build() {
  Builder b;
  group_a(b);
  group_b(b);
  group_c(b);
  group_d(b);
  group_e(b);
  group_f(b);
  return std::move(b.entries);
}

}  // namespace

char param_name(Param p) {
  switch (p) {
    case Param::K: return 'k';
    case Param::P: return 'p';
    case Param::J: return 'j';
    case Param::M: return 'm';
  }
  return '?';
}

std::int64_t param_value(const Params& params, Param p) {
  switch (p) {
    case Param::K: return params.k;
    case Param::P: return params.p;
    case Param::J: return params.j;
    case Param::M: return params.m;
  }
  return 0;
}

bool IdentityEntry::uses(Param p) const { return std::find(params.begin(), params.end(), p) != params.end(); }

bool IdentityEntry::in_domain(const Params& x) const {
  if (uses(Param::K) && x.k < 1) return false;
  if (uses(Param::J) && x.j < 1) return false;
  if (uses(Param::P) && x.p < (p_zero_ok ? 0 : 1)) return false;
  return true;
}

const std::vector<IdentityEntry>& catalog_entries() {
  static const std::vector<IdentityEntry> entries = build();
  return entries;
}

const IdentityEntry* find_entry(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> catalog_base_ids() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries())
    if (out.empty() || out.back() != e.base_id) out.push_back(e.base_id);
  return out;
}

RHSExpr closed_form(const std::string& id, const Params& params) {
  const IdentityEntry* e = find_entry(id);
  if (!e) throw Error(ErrorKind::PreconditionViolation, "unknown identity '" + id + "'");
  if (!e->in_domain(params)) throw Error(ErrorKind::OutOfDomain, id + ": parameters outside the declared domain");
  if (!e->validity(params)) throw Error(ErrorKind::OutOfDomain, id + ": validity predicate '" + e->validity_text + "' fails");
  return e->rhs(params);
}

nlohmann::json params_json(const IdentityEntry& e, const Params& params) {
  nlohmann::json j = nlohmann::json::object();
  for (Param p : e.params) j[std::string(1, param_name(p))] = param_value(params, p);
  return j;
}

nlohmann::json catalog_json() {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog_entries()) {
    nlohmann::json params = nlohmann::json::array();
    for (Param p : e.params) {
      nlohmann::json d{{"name", std::string(1, param_name(p))}};
      if (p == Param::M)
        d["domain"] = "integer";
      else if (p == Param::P && e.p_zero_ok)
        d["domain"] = ">= 0";
      else
        d["domain"] = ">= 1";
      params.push_back(d);
    }
    entries.push_back({{"id", e.id},
                       {"base_id", e.base_id},
                       {"group", std::string(1, e.group)},
                       {"family", e.family},
                       {"params", params},
                       {"lhs", e.lhs_text},
                       {"rhs", e.rhs_text},
                       {"validity", e.validity_text},
                       {"negative_outside_validity", e.negative_outside_validity},
                       {"cross_check", e.cross_check},
                       {"derived", e.derived}});
  }
  return {{"version", kCatalogVersion}, {"entries", entries}};
}

}  // namespace qgs
