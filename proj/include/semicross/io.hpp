// Literal formats consumed and emitted by the CLI.
//
// System:   {"n": 3, "phi": [1, 2, 0]}
// Tail:     adds "tail_depth" and labels "u:k" for the synthesized points
// Poly:     {"side": "left", "coeffs": [{"deg": 0, "values": [[re, im], ...]}]}
// MatPoly:  {"nu": 2, "entries": [poly, ...]}   (row-major)
// Crossed:  like Poly without "side", degrees may be negative

#pragma once

#include <string>

#include <json.hpp>

#include "semicross/algebra.hpp"
#include "semicross/envelope.hpp"
#include "semicross/norms.hpp"

namespace semicross {

using Json = nlohmann::json;

/// Thrown on malformed literals; the message names the offending field.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Json to_json(const FiniteSystem& sys);
FiniteSystem system_from_json(const Json& j);

Json to_json(const TailSystem& tail);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const FiniteSystem& sys);

Json to_json(const MatPoly& m);
MatPoly matpoly_from_json(const Json& j, const FiniteSystem& sys);

Json to_json(const CrossedElement& e);
CrossedElement crossed_from_json(const Json& j, const FiniteSystem& perm);

Json to_json(const NormResult& r);
Json to_json(const EnvelopeDescriptor& d);
Json to_json(const IdealWitness& w);
Json to_json(const MinimalityReport& r);
Json to_json(const SimplicityReport& r);
Json to_json(const CornerReport& r);
Json to_json(const TruncatedOperator& op);  // dense row-major [re, im] list

Json load_json_file(const std::string& path);

}  // namespace semicross
