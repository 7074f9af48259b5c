#pragma once

// The identity catalog: every closed-form evaluation the toolkit knows, as data.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgs/exact.hpp"
#include "qgs/sum_spec.hpp"

namespace qgs {

struct Params {
  std::int64_t k = 1;
  std::int64_t p = 1;
  std::int64_t j = 1;
  std::int64_t m = 0;
  friend bool operator==(const Params&, const Params&) = default;
};

enum class Param { K, P, J, M };

char param_name(Param p);
std::int64_t param_value(const Params& params, Param p);

/// One summand of a left-hand side: coeff · value(spec).
struct LhsTerm {
  ClosedFormValue coeff{1};
  SumSpec spec;
};
using Lhs = std::vector<LhsTerm>;

/// value = sum(closed) + residual_scale · value(residual).
struct RHSExpr {
  std::vector<ClosedFormValue> closed;
  GaussianRational residual_scale{0};
  std::optional<SumSpec> residual;
};

struct IdentityEntry {
  std::string id;       // unique, e.g. "A1", "B1.sin"
  std::string base_id;  // normative entry it belongs to, e.g. "B1"
  char group = 'A';
  std::string family;  // short description of the family the entry belongs to
  std::string lhs_text;
  std::string rhs_text;
  std::vector<Param> params;
  /// p = 0 collapses both sides to the same trivial value.
  bool p_zero_ok = false;
  std::string validity_text = "all";
  std::function<bool(const Params&)> validity = [](const Params&) { return true; };
  /// Outside its validity predicate the identity is known to fail; such
  /// points are evaluated and reported as expected negatives.
  bool negative_outside_validity = false;
  /// Entries that restate another one in a different displayed form.
  std::string cross_check;
  /// Combination of other entries rather than an independent closed form.
  bool derived = false;
  std::function<Lhs(const Params&)> lhs;
  std::function<RHSExpr(const Params&)> rhs;

  bool uses(Param p) const;
  /// Parameter domain check (k, j >= 1; p >= 1, or >= 0 when p_zero_ok).
  bool in_domain(const Params& params) const;
};

inline constexpr int kCatalogVersion = 1;

const std::vector<IdentityEntry>& catalog_entries();
/// nullptr when unknown.
const IdentityEntry* find_entry(const std::string& id);
/// Distinct base ids in catalog order.
std::vector<std::string> catalog_base_ids();

/// Throws OutOfDomain if the point is outside the domain or the validity predicate.
RHSExpr closed_form(const std::string& id, const Params& params);

nlohmann::json catalog_json();
nlohmann::json params_json(const IdentityEntry& e, const Params& params);

}  // namespace qgs
