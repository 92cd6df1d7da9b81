#include "lgm/serialize.hpp"

#include "lgm/errors.hpp"

namespace lgm {

namespace {

Json rational_vector(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw SchemaError(std::string(what) + ": expected an integer or decimal string");
  Integer out;
  if (out.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(std::string(what) + ": malformed integer");
  return out;
}

Rational rational_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, what));
  if (!j.is_string()) throw SchemaError(std::string(what) + ": expected a rational string");
  Rational out;
  if (out.set_str(j.get<std::string>(), 10) != 0 || out.get_den() == 0) {
    throw SchemaError(std::string(what) + ": malformed rational");
  }
  out.canonicalize();
  return out;
}

}  // namespace

Json to_json(const IntegerSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

IntegerSeries series_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("series: expected an array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c, "series"));
  return IntegerSeries(std::move(coeffs));
}

Json to_json(const MatchReport& m) {
  Json out{{"match", m.match}, {"compared_upto", m.compared_upto}, {"up_to_shift", m.up_to_shift}};
  if (m.index) {
    out["index"] = *m.index;
    out["lhs"] = m.lhs.get_str();
    out["rhs"] = m.rhs.get_str();
  }
  return out;
}

Json to_json(const Polytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(rational_vector(v));
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json normal = Json::array();
    for (const auto& a : f.normal) normal.push_back(a.get_str());
    facets.push_back(Json{{"normal", normal}, {"offset", f.offset.get_str()}});
  }
  return Json{{"dim", p.dim()},
              {"affine_dim", p.affine_dim()},
              {"lattice", p.is_lattice()},
              {"vertices", vertices},
              {"facets", facets}};
}

Json to_json(const SemiweakReport& r) {
  Json out{{"semiweak", r.semiweak},
           {"origin_interior", r.origin_interior},
           {"dual_volume", r.dual_volume ? Json(r.dual_volume->get_str()) : Json(nullptr)},
           {"degree", r.degree.get_str()}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json to_json(const EhrhartData& d) {
  Json counts = Json::array();
  for (const auto& c : d.counts) counts.push_back(c.get_str());
  return Json{{"counts", counts}, {"coefficients", rational_vector(d.coefficients)}, {"consistent", d.consistent}};
}

Json to_json(const DifferentialOperator& op) {
  Json coeffs = Json::array();
  for (const auto& [key, c] : op.coeffs) coeffs.push_back(Json::array({key.first, key.second, c.get_str()}));
  return Json{{"order", op.order}, {"degree", op.degree}, {"coeffs", coeffs}, {"text", render(op)}};
}

DifferentialOperator operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("degree") || !j.contains("coeffs")) {
    throw SchemaError("operator: fields 'order', 'degree' and 'coeffs' are required");
  }
  DifferentialOperator op;
  op.order = j["order"].get<std::size_t>();
  op.degree = j["degree"].get<std::size_t>();
  for (const auto& c : j["coeffs"]) {
    if (!c.is_array() || c.size() != 3) throw SchemaError("operator: each coefficient is [l, j, \"p/q\"]");
    const auto l = c[0].get<std::size_t>();
    const auto d = c[1].get<std::size_t>();
    if (l > op.degree || d > op.order) throw SchemaError("operator: coefficient index outside the bounds");
    const Rational v = rational_from_json(c[2], "operator coefficient");
    if (v != 0) op.coeffs[{l, d}] = v;
  }
  return op;
}

Json to_json(const ConstrainedModel& m) {
  Json constraints = Json::array();
  for (const auto& c : m.constraints) constraints.push_back(render(c));
  return Json{{"variables", m.variables}, {"constraints", constraints}, {"potential", render(m.potential)}};
}

ConstrainedModel model_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("model: expected an object");
  for (const char* field : {"variables", "constraints", "potential"}) {
    if (!j.contains(field)) throw SchemaError(std::string("model: field '") + field + "' is missing");
  }
  ConstrainedModel m;
  if (!j["variables"].is_array()) throw SchemaError("model: field 'variables' must be an array of strings");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw SchemaError("model: field 'variables' must be an array of strings");
    m.variables.push_back(v.get<std::string>());
  }
  if (!j["constraints"].is_array()) throw SchemaError("model: field 'constraints' must be an array of strings");
  for (const auto& c : j["constraints"]) {
    if (!c.is_string()) throw SchemaError("model: field 'constraints' must be an array of strings");
    m.constraints.push_back(parse(c.get<std::string>()));
  }
  if (!j["potential"].is_string()) throw SchemaError("model: field 'potential' must be a string");
  m.potential = parse(j["potential"].get<std::string>());
  validate(m);
  return m;
}

Json to_json(const NamedPolynomial& p) {
  return Json{{"variables", p.variables}, {"polynomial", render(p.poly, p.variables)}, {"terms", p.poly.size()}};
}

Json to_json(const Elimination& e) {
  Json solutions = Json::object();
  for (const auto& [name, value] : e.solutions) solutions[name] = render(value);
  return Json{{"potential", render(e.potential)}, {"solutions", solutions}};
}

Json to_json(const IdentityResult& r) {
  Json out{{"equal", r.equal}, {"trials", r.trials}, {"discarded", r.discarded}};
  if (!r.equal) {
    Json witness = Json::object();
    for (const auto& [name, v] : r.witness) witness[name] = v;
    out["witness"] = witness;
    out["lhs_value"] = r.lhs_value;
    out["rhs_value"] = r.rhs_value;
  }
  return out;
}

Json to_json(const FanoEntry& e) {
  Json out{{"id", e.id},
           {"fano_index", e.fano_index},
           {"degree", e.degree.fits_slong_p() ? Json(e.degree.get_si()) : Json(e.degree.get_str())},
           {"description", e.description},
           {"polynomial", e.polynomial}};
  if (!e.alternates.empty()) out["alternates"] = e.alternates;
  if (e.reference_series) {
    out["reference_series"] = Json{{"coeffs", to_json(e.reference_series->coeffs)},
                                   {"provenance", e.reference_series->provenance}};
  }
  if (e.ci) out["ci"] = Json{{"N", e.ci->ambient_dim}, {"degrees", e.ci->degrees}};
  if (e.weighted) {
    out["weighted"] = Json{{"weights", e.weighted->weights}, {"d", e.weighted->degree}, {"partition", e.weighted->partition}};
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out{{"id", r.id}, {"terms", r.terms}, {"passed", r.passed()}, {"series", to_json(r.series)}};
  out["reference"] = r.reference ? to_json(*r.reference) : Json(nullptr);
  out["closed_form"] = r.closed_form ? to_json(*r.closed_form) : Json(nullptr);
  Json alts = Json::array();
  for (const auto& a : r.alternates) {
    alts.push_back(Json{{"polynomial", a.polynomial}, {"series", to_json(a.series)}, {"match", to_json(a.match)}});
  }
  out["alternates"] = alts;
  out["semiweak"] = to_json(r.semiweak);
  out["origin_interior"] = r.origin_interior;
  return out;
}

}  // namespace lgm
