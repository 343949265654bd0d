#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vaisman/axioms.hpp"
#include "vaisman/formal.hpp"
#include "vaisman/rack.hpp"
#include "vaisman/sigma.hpp"

namespace vaisman::io {

using Json = nlohmann::ordered_json;

/// Well-formed JSON that does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": D, "vec": ["<poly>", ...], "form": ["<poly>", ...]}
Json to_json(const GenSection& e);
GenSection section_from_json(const Json& j);

/// Polynomials travel as strings in the symexpr grammar.
Json to_json(const Poly& p);
/// Accepts a bare string (needs `space`) or {"dim": D, "poly": "<poly>"}.
Poly poly_from_json(const Json& j, std::optional<DoubledSpace> space);
/// Whether `j` looks like a function payload rather than a section.
bool is_function_payload(const Json& j);

/// {"n": n, "op": [[...], ...], "unit": k | null}
Json to_json(const rack::RackTable& t);
rack::RackTable rack_from_json(const Json& j);

Json to_json(const ResidualReport& r);
Json to_json(const rack::RackVerdict& v);
Json to_json(const rack::QybeVerdict& v);
Json to_json(const GradedReport& r);
Json to_json(const SectionJet& s);
Json to_json(const FunctionJet& s);
Json to_json(const sigma::ConstraintAlgebraReport& r, const sigma::LatticePhaseSpace& ps,
             bool include_zero_pairs);

/// Reads and parses a JSON file; throws SchemaError when unreadable or malformed.
Json read_json_file(const std::string& path);

}  // namespace vaisman::io
