#include "semicross/io.hpp"

#include <fstream>

namespace semicross {

namespace {

Json complex_to_json(const Cplx& v) { return Json::array({v.real(), v.imag()}); }

Cplx complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("field '" + field + "' must be a [re, im] pair");
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json fn_to_json(const Fn& f) {
  Json arr = Json::array();
  for (const Cplx& v : f) arr.push_back(complex_to_json(v));
  return arr;
}

Fn fn_from_json(const Json& j, int n, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("field '" + field + "' must list one value per point (" + std::to_string(n) + ")");
  Fn f;
  f.reserve(j.size());
  for (const Json& v : j) f.push_back(complex_from_json(v, field));
  return f;
}

int int_field(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw ParseError("missing or non-integer field '" + field + "'");
  return j[field].get<int>();
}

std::map<int, Fn> coeffs_from_json(const Json& j, int n, bool allow_negative) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("missing or non-array field 'coeffs'");
  std::map<int, Fn> out;
  for (const Json& entry : j["coeffs"]) {
    const int deg = int_field(entry, "deg");
    if (deg < 0 && !allow_negative) throw ParseError("field 'deg' must be nonnegative");
    if (!entry.contains("values")) throw ParseError("missing field 'values'");
    if (!out.emplace(deg, fn_from_json(entry["values"], n, "values")).second)
      throw ParseError("duplicate degree " + std::to_string(deg) + " in 'coeffs'");
  }
  return out;
}

Json coeffs_to_json(const std::map<int, Fn>& coeffs) {
  Json arr = Json::array();
  for (const auto& [deg, fn] : coeffs) arr.push_back(Json{{"deg", deg}, {"values", fn_to_json(fn)}});
  return arr;
}

}  // namespace

Json to_json(const FiniteSystem& sys) { return Json{{"n", sys.n}, {"phi", sys.phi}}; }

FiniteSystem system_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (!j.contains("phi") || !j["phi"].is_array())
    throw ParseError("missing or non-array field 'phi'");
  std::vector<int> phi;
  for (const Json& v : j["phi"]) {
    if (!v.is_number_integer()) throw ParseError("field 'phi' must hold integers");
    phi.push_back(v.get<int>());
  }
  try {
    return FiniteSystem(n, std::move(phi));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid system: ") + e.what());
  }
}

Json to_json(const TailSystem& tail) {
  Json j = to_json(tail.combined);
  j["tail_depth"] = tail.depth;
  j["base_n"] = tail.base.n;
  j["labels"] = tail.labels;
  return j;
}

Json to_json(const Poly& p) {
  return Json{{"side", to_string(p.side)}, {"coeffs", coeffs_to_json(p.coeffs)}};
}

Poly poly_from_json(const Json& j, const FiniteSystem& sys) {
  if (!j.contains("side") || !j["side"].is_string()) throw ParseError("missing field 'side'");
  const std::string side = j["side"].get<std::string>();
  if (side != "left" && side != "right") throw ParseError("field 'side' must be 'left' or 'right'");
  Poly p{sys, side == "left" ? Side::left : Side::right, coeffs_from_json(j, sys.n, false)};
  canonicalize(p);
  return p;
}

Json to_json(const MatPoly& m) {
  Json entries = Json::array();
  for (const Poly& e : m.entries) entries.push_back(to_json(e));
  return Json{{"nu", m.nu}, {"entries", entries}};
}

MatPoly matpoly_from_json(const Json& j, const FiniteSystem& sys) {
  const int nu = int_field(j, "nu");
  if (nu <= 0) throw ParseError("field 'nu' must be positive");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != nu * nu)
    throw ParseError("field 'entries' must hold nu*nu polynomials (row-major)");
  MatPoly m = zero_mat(sys, Side::left, nu);
  for (int k = 0; k < nu * nu; ++k)
    m.entries[static_cast<std::size_t>(k)] = poly_from_json(j["entries"][static_cast<std::size_t>(k)], sys);
  m.side = m.entries.front().side;
  for (const Poly& e : m.entries)
    if (e.side != m.side) throw ParseError("matrix entries must share one side");
  return m;
}

Json to_json(const CrossedElement& e) { return Json{{"coeffs", coeffs_to_json(e.coeffs)}}; }

CrossedElement crossed_from_json(const Json& j, const FiniteSystem& perm) {
  CrossedElement e{perm, coeffs_from_json(j, perm.n, true)};
  canonicalize(e);
  return e;
}

Json to_json(const NormResult& r) {
  return Json{{"value", r.value},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound},
              {"converged", r.converged},
              {"effort", Json{{"depth", r.effort.depth}, {"grid_evals", r.effort.grid_evals}}}};
}

Json to_json(const EnvelopeDescriptor& d) {
  Json j{{"side", to_string(d.side)},
         {"kind", to_string(d.kind)},
         {"shape", d.shape == EnvelopeShape::crossed_product ? "crossed_product" : "full_corner"},
         {"injective", d.injective},
         {"permutation_system", to_json(d.permutation_system)},
         {"label", d.label}};
  if (d.shape == EnvelopeShape::full_corner) {
    j["tail_system"] = to_json(d.tail);
    j["projection"] = d.projection;
  }
  return j;
}

Json to_json(const IdealWitness& w) {
  Json j{{"description", w.description}};
  if (w.kind == IdealWitness::Kind::invariant_subset) {
    j["kind"] = "invariant_subset";
    j["subset"] = w.subset.points();
  } else {
    j["kind"] = "symbol_evaluation";
    j["orbit"] = w.orbit;
    j["z0"] = complex_to_json(w.z0);
  }
  return j;
}

Json to_json(const MinimalityReport& r) {
  Json witnesses = Json::array();
  for (const IdealWitness& w : r.witnesses) witnesses.push_back(to_json(w));
  return Json{{"base_minimal", r.base_minimal},
              {"tail_minimal", r.tail_minimal},
              {"limit_bi_minimal", r.limit_bi_minimal},
              {"fourier_ideals_empty", r.fourier_ideals_empty},
              {"all_agree", r.all_agree},
              {"injective", r.injective},
              {"witnesses", witnesses},
              {"tail_note", r.tail_note}};
}

Json to_json(const SimplicityReport& r) {
  return Json{{"verdict", r.simple ? "simple" : "non_simple"},
              {"witness", to_json(r.witness)},
              {"witness_validated", r.witness_validated},
              {"validation_residual", r.validation_residual}};
}

Json to_json(const CornerReport& r) {
  return Json{{"tail_depth", r.tail_depth},
              {"base_norm", to_json(r.base_norm)},
              {"tail_norm", to_json(r.tail_norm)},
              {"difference", r.difference},
              {"tolerance", r.tolerance},
              {"consistent", r.consistent}};
}

Json to_json(const TruncatedOperator& op) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < op.mat.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < op.mat.cols(); ++j) row.push_back(complex_to_json(op.mat(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n_points", op.n_points}, {"block_dim", op.block_dim}, {"matrix", rows}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("file '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace semicross
