#include "qgs/verify.hpp"

#include <numeric>

#include "qgs/cyclotomic.hpp"
#include "qgs/direct_sum.hpp"
#include "qgs/error.hpp"

namespace qgs {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::OutOfDomain: return "OUT_OF_DOMAIN";
    case Status::ExactPass: return "EXACT_PASS";
  }
  return "?";
}

bool VerificationRecord::unexpected() const {
  if (expected_negative) return status == Status::Pass || status == Status::ExactPass;
  return status == Status::Fail;
}

namespace {

bool is_one(const ClosedFormValue& v) { return v.is_gaussian_rational() && v.surd().rational_part() == GaussianRational(1); }

HighPrecComplex scaled(const ClosedFormValue& c, const HighPrecComplex& z, Precision prec) {
  if (is_one(c)) return z;
  if (c.is_gaussian_rational()) return hp_scale(z, c.surd().rational_part());
  return hp_mul(cf_to_complex(c, prec), z);
}

HighPrecComplex zero(Precision prec) {
  HighPrecComplex z(prec);
  mpfr_set_zero(z.re.get(), 1);
  mpfr_set_zero(z.im.get(), 1);
  return z;
}

}  // namespace

HighPrecComplex evaluate_lhs(const Lhs& lhs, Precision prec) {
  HighPrecComplex acc = zero(prec);
  for (const auto& t : lhs) acc = hp_add(acc, scaled(t.coeff, direct_sum(t.spec, prec), prec));
  return acc;
}

HighPrecComplex evaluate_rhs(const RHSExpr& rhs, Precision prec) {
  HighPrecComplex acc = zero(prec);
  for (const auto& c : rhs.closed) acc = hp_add(acc, cf_to_complex(c, prec));
  if (rhs.residual && !rhs.residual_scale.is_zero())
    acc = hp_add(acc, hp_scale(direct_sum(*rhs.residual, prec), rhs.residual_scale));
  return acc;
}

std::optional<bool> exact_equal(const Lhs& lhs, const RHSExpr& rhs) {
  if (rhs.residual && !rhs.residual_scale.is_zero()) return std::nullopt;
  GaussianRational constant;
  for (const auto& c : rhs.closed) {
    if (!c.is_gaussian_rational()) return std::nullopt;
    constant += c.surd().rational_part();
  }
  std::int64_t order = 4;
  for (const auto& t : lhs) {
    if (!t.coeff.is_gaussian_rational()) return std::nullopt;
    if (t.spec.term_count() > kCyclotomicTermCap) return std::nullopt;
    const __int128 n = 2 * static_cast<__int128>(t.spec.half_modulus());
    if (n > kExactTestOrderCap) return std::nullopt;
    order = std::lcm(order, static_cast<std::int64_t>(n));
    // Sin lifts its element to a multiple of 4, already covered by the 4 above.
    if (order > kExactTestOrderCap) return std::nullopt;
  }
  // Everything is doubled: twice_value_element(s) embeds to 2·value(s).
  CyclotomicElement z(order);
  for (const auto& t : lhs) {
    const CyclotomicElement v = twice_value_element(t.spec).lift(order);
    const GaussianRational& c = t.coeff.surd().rational_part();
    if (sgn(c.re()) != 0) {
      CyclotomicElement part = v;
      part *= c.re();
      z += part;
    }
    if (sgn(c.im()) != 0) {
      CyclotomicElement part = v.times_i();
      part *= c.im();
      z += part;
    }
  }
  z.add_root(0, -2 * constant.re());
  z.add_root(order / 4, -2 * constant.im());
  return embeds_to_zero(z);
}

VerificationRecord verify(const IdentityEntry& e, const Params& params, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord r;
  r.id = e.id;
  r.params = params;
  r.params_json = params_json(e, params);
  auto finish = [&]() -> VerificationRecord {
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
  };
  if (!e.in_domain(params)) {
    r.status = Status::OutOfDomain;
    r.note = "outside parameter domain";
    return finish();
  }
  if (!e.validity(params)) {
    if (!(e.negative_outside_validity && opt.evaluate_negatives)) {
      r.status = Status::OutOfDomain;
      r.note = "validity predicate '" + e.validity_text + "' fails";
      return finish();
    }
    r.expected_negative = true;
  }
  const Lhs lhs = e.lhs(params);
  const RHSExpr rhs = e.rhs(params);

  if (opt.exact) {
    try {
      if (auto eq = exact_equal(lhs, rhs)) {
        r.lhs_value = evaluate_lhs(lhs, opt.precision);
        r.rhs_value = evaluate_rhs(rhs, opt.precision);
        r.gap = hp_distance_upper(*r.lhs_value, *r.rhs_value);
        r.bound = add_up(add_up(r.lhs_value->err, r.rhs_value->err), opt.tolerance);
        r.status = *eq ? Status::ExactPass : Status::Fail;
        r.note = *eq ? "cyclotomic zero test" : "cyclotomic test: exact nonzero difference";
        return finish();
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OrderTooLarge) throw;
    }
  }
  r.lhs_value = evaluate_lhs(lhs, opt.precision);
  r.rhs_value = evaluate_rhs(rhs, opt.precision);
  r.gap = hp_distance_upper(*r.lhs_value, *r.rhs_value);
  r.bound = add_up(add_up(r.lhs_value->err, r.rhs_value->err), opt.tolerance);
  r.status = r.gap <= r.bound ? Status::Pass : Status::Fail;
  return finish();
}

VerificationRecord verify(const std::string& id, const Params& params, const VerifyOptions& opt) {
  const IdentityEntry* e = find_entry(id);
  if (!e) throw Error(ErrorKind::PreconditionViolation, "unknown identity '" + id + "'");
  return verify(*e, params, opt);
}

nlohmann::json to_json(const VerificationRecord& r, bool include_timing) {
  nlohmann::json j{{"id", r.id}, {"params", r.params_json}, {"status", to_string(r.status)}};
  if (r.lhs_value) {
    j["lhs"] = {{"re", r.lhs_value->re.to_string(36)}, {"im", r.lhs_value->im.to_string(36)}, {"err", r.lhs_value->err}};
    j["rhs"] = {{"re", r.rhs_value->re.to_string(36)}, {"im", r.rhs_value->im.to_string(36)}, {"err", r.rhs_value->err}};
    j["gap"] = r.gap;
    j["bound"] = r.bound;
  }
  j["expected_negative"] = r.expected_negative;
  if (!r.note.empty()) j["note"] = r.note;
  if (include_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

}  // namespace qgs
