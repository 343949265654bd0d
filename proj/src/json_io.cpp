#include "vaisman/json_io.hpp"

#include <fstream>
#include <sstream>

#include "vaisman/parser.hpp"

namespace vaisman::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t positive_size(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw SchemaError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<Poly> poly_list(const Json& j, const char* key, DoubledSpace space) {
  const Json& arr = field(j, key);
  if (!arr.is_array() || arr.size() != space.dim()) {
    throw SchemaError(std::string("field '") + key + "' must be an array of " +
                      std::to_string(space.dim()) + " polynomials");
  }
  std::vector<Poly> out;
  for (const Json& item : arr) out.push_back(poly_from_json(item, space));
  return out;
}

}  // namespace

Json to_json(const GenSection& e) {
  Json vec = Json::array();
  Json form = Json::array();
  for (const Poly& p : e.vec()) vec.push_back(p.to_string());
  for (const Poly& p : e.form()) form.push_back(p.to_string());
  return Json{{"dim", e.dim()}, {"vec", vec}, {"form", form}};
}

GenSection section_from_json(const Json& j) {
  const DoubledSpace space(positive_size(j, "dim"));
  return GenSection(poly_list(j, "vec", space), poly_list(j, "form", space));
}

Json to_json(const Poly& p) { return p.to_string(); }

Poly poly_from_json(const Json& j, std::optional<DoubledSpace> space) {
  if (j.is_string()) {
    if (!space) throw SchemaError("a bare polynomial string needs a known dimension");
    return parse_poly(j.get<std::string>(), *space);
  }
  if (j.is_number_integer()) {
    if (!space) throw SchemaError("a bare polynomial needs a known dimension");
    return Poly::constant(*space, Rational(j.get<long>()));
  }
  if (j.is_object() && j.contains("poly")) {
    const DoubledSpace own(positive_size(j, "dim"));
    if (space && !(own == *space)) throw SpaceMismatch("function dimension differs from the sections");
    const Json& text = j.at("poly");
    if (!text.is_string()) throw SchemaError("field 'poly' must be a string");
    return parse_poly(text.get<std::string>(), own);
  }
  throw SchemaError("expected a polynomial string or {\"dim\", \"poly\"} object");
}

bool is_function_payload(const Json& j) {
  return j.is_string() || j.is_number_integer() || (j.is_object() && j.contains("poly"));
}

Json to_json(const rack::RackTable& t) {
  Json op = Json::array();
  for (const auto& row : t.rows()) op.push_back(row);
  Json unit = t.unit() ? Json(*t.unit()) : Json(nullptr);
  return Json{{"n", t.size()}, {"op", op}, {"unit", unit}};
}

rack::RackTable rack_from_json(const Json& j) {
  const std::size_t n = positive_size(j, "n");
  const Json& op = field(j, "op");
  if (!op.is_array() || op.size() != n) throw SchemaError("field 'op' must have n rows");
  std::vector<rack::Element> flat;
  for (const Json& row : op) {
    if (!row.is_array() || row.size() != n) throw SchemaError("every row of 'op' must have n entries");
    for (const Json& v : row) {
      if (!v.is_number_unsigned()) throw SchemaError("table entries must be nonnegative integers");
      flat.push_back(v.get<rack::Element>());
    }
  }
  std::optional<rack::Element> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) {
    if (!j.at("unit").is_number_unsigned()) throw SchemaError("field 'unit' must be an index or null");
    unit = j.at("unit").get<rack::Element>();
  }
  try {
    return rack::RackTable(n, std::move(flat), unit);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

namespace {

Json residual_json(const Residual& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

Json triples_json(const std::vector<rack::Triple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
  return out;
}

}  // namespace

Json to_json(const ResidualReport& r) {
  Json j{{"axiom", r.axiom}, {"bracket", std::string(to_string(r.kind))}, {"is_zero", r.is_zero},
         {"residual", residual_json(r.residual)}};
  if (r.probe_residual) j["probe_residual"] = to_json(*r.probe_residual);
  Json sections = Json::array();
  for (const auto& e : r.witness.sections) sections.push_back(to_json(e));
  Json witness{{"sections", sections}};
  if (r.witness.function) witness["function"] = to_json(*r.witness.function);
  j["witness"] = witness;
  return j;
}

Json to_json(const rack::RackVerdict& v) {
  return Json{{"is_rack", v.is_rack},
              {"is_quandle", v.is_quandle},
              {"is_pointed", v.is_pointed},
              {"rows_bijective", v.rows_bijective},
              {"self_distributive", v.self_distributive},
              {"units", v.units},
              {"failure_count", v.failure_count},
              {"failing_triples", triples_json(v.failing_triples)}};
}

Json to_json(const rack::QybeVerdict& v) {
  return Json{{"satisfies_qybe", v.satisfies_qybe},
              {"rows_bijective", v.rows_bijective},
              {"failure_count", v.failure_count},
              {"failing_triples", triples_json(v.failing_triples)}};
}

namespace {

template <class T>
Json jet_json(const Jet<T>& s) {
  Json coeffs = Json::array();
  for (const auto& [d, c] : s.coefficients()) {
    coeffs.push_back(Json{{"t", d.t}, {"s", d.s}, {"coefficient", to_json(c)}});
  }
  return Json{{"order", s.order()}, {"coefficients", coeffs}};
}

}  // namespace

Json to_json(const SectionJet& s) { return jet_json(s); }
Json to_json(const FunctionJet& s) { return jet_json(s); }

Json to_json(const GradedReport& r) {
  Json j{{"identity", static_cast<int>(r.identity)},
         {"name", to_string(r.identity)},
         {"bracket", std::string(to_string(r.kind))},
         {"order", r.order},
         {"holds", r.holds()}};
  j["lowest_failing_degree"] = r.lowest_failing_degree ? Json(*r.lowest_failing_degree) : Json(nullptr);
  j["residual"] = std::visit([](const auto& s) { return to_json(s); }, r.residual);
  return j;
}

Json to_json(const sigma::ConstraintAlgebraReport& r, const sigma::LatticePhaseSpace& ps,
             bool include_zero_pairs) {
  Json j{{"model", sigma::to_string(r.model)},
         {"dim", ps.dim()},
         {"grid", {ps.l1(), ps.l2()}},
         {"spacing", {rational_to_string(ps.spacing(1)), rational_to_string(ps.spacing(2))}},
         {"constraint_count", r.constraints.size()},
         {"pair_count", r.pairs.size()},
         {"first_class", r.first_class},
         {"obstruction_count", r.obstruction_count}};
  if (r.gg_matches_eta_eps) j["gg_matches_eta_eps"] = *r.gg_matches_eta_eps;
  if (!r.polarizations.empty()) {
    Json pols = Json::array();
    for (const auto& p : r.polarizations) {
      pols.push_back(Json{{"half", p.half}, {"first_class", p.first_class},
                          {"obstruction_count", p.obstruction_count}});
    }
    j["polarizations"] = pols;
  }
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    if (!include_zero_pairs && p.bracket.is_zero()) continue;
    pairs.push_back(Json{{"pair", {r.constraints[p.first].label, r.constraints[p.second].label}},
                         {"bracket", sigma::to_string(p.bracket, ps)},
                         {"class", sigma::to_string(p.cls)}});
  }
  j["pairs"] = pairs;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw SchemaError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace vaisman::io
