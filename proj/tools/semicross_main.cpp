// semicross - norms and structure of semicrossed products over finite
// dynamical systems.
//
// Subcommands:
//   norm     compute the semicrossed norm of a polynomial element
//   analyze  structure report for a system (radical, orbits, minimality,
//            simplicity, envelope descriptors for all eight side/kind pairs)
//   rep      export a truncated representation matrix for debugging
//   verify   run the verification suite (acceptance criteria + sweeps)
//
// Exit codes: 0 success, 1 input error, 2 non-converged bracket,
// 3 verification failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "semicross/envelope.hpp"
#include "semicross/io.hpp"
#include "semicross/verify.hpp"

namespace {

using namespace semicross;

constexpr const char* kSchema = "semicross/1";

struct GlobalFlags {
  RunConfig cfg;
  std::string format = "table";
};

void add_common_flags(CLI::App* cmd, GlobalFlags& flags) {
  cmd->add_option("--tol", flags.cfg.tol, "bracket tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", flags.cfg.max_depth, "deepest shift compression");
  cmd->add_option("--grid", flags.cfg.grid_start, "initial circle grid size");
  cmd->add_option("--tail-depth", flags.cfg.tail_depth, "tail truncation depth");
  cmd->add_option("--nmax", flags.cfg.nmax_norms, "exhaustive bound for norm sweeps");
  cmd->add_option("--seed", flags.cfg.seed, "random seed for the suite");
  cmd->add_option("--format", flags.format, "output format: table|machine")
      ->check(CLI::IsMember({"table", "machine"}));
}

PairKind parse_kind(const std::string& name) {
  if (name == "contractive") return PairKind::contractive;
  if (name == "isometric") return PairKind::isometric;
  if (name == "co-isometric") return PairKind::co_isometric;
  if (name == "unitary") return PairKind::unitary;
  throw ParseError("unknown kind '" + name + "'");
}

int cmd_norm(const GlobalFlags& flags, const std::string& system_file,
             const std::string& poly_file, const std::string& kind_name) {
  const FiniteSystem sys = system_from_json(load_json_file(system_file));
  const Poly poly = poly_from_json(load_json_file(poly_file), sys);
  const PairKind kind = parse_kind(kind_name);

  NormOptions opts = flags.cfg.norm_options();
  const NormResult result = semicrossed_norm(sys, poly, kind, flags.cfg.tol, opts);

  if (flags.format == "machine") {
    Json j{{"schema", kSchema},
           {"command", "norm"},
           {"system", to_json(sys)},
           {"side", to_string(poly.side)},
           {"kind", kind_name},
           {"result", to_json(result)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("side=%s kind=%s\n", to_string(poly.side), kind_name.c_str());
    std::printf("value      %.9f\n", result.value);
    std::printf("bracket    [%.9f, %.9f]\n", result.lower_bound, result.upper_bound);
    std::printf("converged  %s\n", result.converged ? "yes" : "no (bracket only)");
    std::printf("effort     depth=%d grid_evals=%ld\n", result.effort.depth,
                result.effort.grid_evals);
  }
  return result.converged ? 0 : 2;
}

int cmd_analyze(const GlobalFlags& flags, const std::string& system_file) {
  const FiniteSystem sys = system_from_json(load_json_file(system_file));
  const OrbitData orbits = orbit_data(sys);
  const SubsetMask radical = radical_support(sys);
  const MinimalityReport minimality = minimality_report(sys);
  const SimplicityReport simplicity = simplicity_report(sys);

  Json envelopes = Json::array();
  for (Side side : {Side::left, Side::right})
    for (PairKind kind :
         {PairKind::contractive, PairKind::isometric, PairKind::co_isometric, PairKind::unitary})
      envelopes.push_back(to_json(envelope_of(sys, side, kind)));

  if (flags.format == "machine") {
    Json cycles = Json::array();
    for (const Cycle& c : orbits.cycles) cycles.push_back(c.points);
    Json j{{"schema", kSchema},
           {"command", "analyze"},
           {"system", to_json(sys)},
           {"eventual_image", orbits.eventual_image.points()},
           {"radical_support", radical.points()},
           {"cycles", cycles},
           {"minimality", to_json(minimality)},
           {"simplicity", to_json(simplicity)},
           {"envelopes", envelopes}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::printf("system: n=%d, phi=[", sys.n);
  for (int x = 0; x < sys.n; ++x) std::printf("%s%d", x ? "," : "", sys.apply(x));
  std::printf("]  %s\n", sys.is_permutation() ? "(permutation)" : "(non-injective)");
  std::printf("eventual image: %s   radical support: %s\n",
              orbits.eventual_image.to_string().c_str(), radical.to_string().c_str());
  std::printf("cycles:");
  for (const Cycle& c : orbits.cycles) {
    std::printf(" (");
    for (std::size_t i = 0; i < c.points.size(); ++i)
      std::printf("%s%d", i ? " " : "", c.points[i]);
    std::printf(")");
  }
  std::printf("\nminimal: %s   bi-minimal(limit): %s   fourier ideals empty: %s\n",
              minimality.base_minimal ? "yes" : "no",
              minimality.limit_bi_minimal ? "yes" : "no",
              minimality.fourier_ideals_empty ? "yes" : "no");
  if (!minimality.tail_note.empty()) std::printf("note: %s\n", minimality.tail_note.c_str());
  for (const IdealWitness& w : minimality.witnesses)
    std::printf("witness: %s\n", w.description.c_str());
  std::printf("simplicity: non_simple (witness: %s, validated: %s)\n",
              simplicity.witness.description.c_str(),
              simplicity.witness_validated ? "yes" : "no");
  std::printf("envelopes:\n");
  for (const Json& e : envelopes)
    std::printf("  %-5s %-13s -> %s\n", e["side"].get<std::string>().c_str(),
                e["kind"].get<std::string>().c_str(), e["label"].get<std::string>().c_str());
  return 0;
}

int cmd_rep(const GlobalFlags& flags, const std::string& system_file, const std::string& poly_file,
            int depth) {
  const FiniteSystem sys = system_from_json(load_json_file(system_file));
  const Poly poly = poly_from_json(load_json_file(poly_file), sys);
  const TruncatedOperator op = poly.side == Side::left ? orbit_shift_rep(sys, poly, depth)
                                                       : right_orbit_rep(sys, poly, depth);
  Json j{{"schema", kSchema}, {"command", "rep"}, {"depth", depth}, {"operator", to_json(op)}};
  std::cout << j.dump(flags.format == "machine" ? -1 : 2) << "\n";
  return 0;
}

int cmd_verify(const GlobalFlags& flags, bool acceptance_only) {
  const bool table = flags.format != "machine";
  long failures = 0;
  const auto progress = [&](const CheckResult& r) {
    if (table)
      std::printf("[%s] %-32s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                  r.detail.c_str());
    if (!r.passed) ++failures;
  };
  const auto results = run_verification(flags.cfg, acceptance_only, progress);

  if (!table) {
    Json checks = Json::array();
    for (const CheckResult& r : results)
      checks.push_back(Json{{"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
    Json j{{"schema", kSchema},
           {"command", "verify"},
           {"seed", flags.cfg.seed},
           {"checks", checks},
           {"failures", failures}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%zu checks, %ld failed\n", results.size(), failures);
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semicrossed products of finite dynamical systems"};
  app.require_subcommand(1);

  GlobalFlags flags;

  std::string system_file, poly_file, kind_name = "contractive";
  int rep_depth = 8;
  bool acceptance_only = false;

  CLI::App* norm = app.add_subcommand("norm", "compute a semicrossed norm");
  norm->add_option("--system", system_file, "system literal file")->required();
  norm->add_option("--poly", poly_file, "polynomial literal file")->required();
  norm->add_option("--kind", kind_name, "contractive|isometric|co-isometric|unitary");
  add_common_flags(norm, flags);

  CLI::App* analyze = app.add_subcommand("analyze", "structure and envelope report");
  analyze->add_option("--system", system_file, "system literal file")->required();
  add_common_flags(analyze, flags);

  CLI::App* rep = app.add_subcommand("rep", "export a truncated representation matrix");
  rep->add_option("--system", system_file, "system literal file")->required();
  rep->add_option("--poly", poly_file, "polynomial literal file")->required();
  rep->add_option("--depth", rep_depth, "truncation depth");
  add_common_flags(rep, flags);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--acceptance-only", acceptance_only, "run only the acceptance criteria");
  add_common_flags(verify, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm->parsed()) return cmd_norm(flags, system_file, poly_file, kind_name);
    if (analyze->parsed()) return cmd_analyze(flags, system_file);
    if (rep->parsed()) return cmd_rep(flags, system_file, poly_file, rep_depth);
    if (verify->parsed()) return cmd_verify(flags, acceptance_only);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
