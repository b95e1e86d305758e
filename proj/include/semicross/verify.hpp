// The theorem-verification suite: every acceptance criterion plus the
// per-module property sweeps, runnable as named checks with deterministic
// seeding. The CLI `verify` command and the acceptance test binary are both
// thin wrappers around run_verification.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "semicross/algebra.hpp"
#include "semicross/norms.hpp"

namespace semicross {

struct RunConfig {
  double tol = 1e-6;
  int max_depth = 1 << 14;
  int grid_start = 512;
  int tail_depth = 2;
  int nmax_norms = 4;   // exhaustive-system bound for norm sweeps
  int nmax_comb = 5;    // exhaustive-system bound for combinatorial sweeps
  bool machine = false; // table vs machine output (CLI concern)
  std::uint64_t seed = 12345;

  NormOptions norm_options() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names of the registered checks, sorted; acceptance_only keeps the ac* set.
std::vector<std::string> verification_check_names(bool acceptance_only);

/// Runs the checks in name order; `progress` fires after each one.
std::vector<CheckResult> run_verification(
    const RunConfig& cfg, bool acceptance_only,
    const std::function<void(const CheckResult&)>& progress = {});

// Deterministic generators shared by the suite and the tests.
Fn random_fn(std::mt19937_64& rng, int n, double scale = 1.0);
Poly random_poly(std::mt19937_64& rng, const FiniteSystem& sys, Side side, int max_degree);
CrossedElement random_crossed(std::mt19937_64& rng, const FiniteSystem& perm, int max_abs_degree);
MatPoly random_matpoly(std::mt19937_64& rng, const FiniteSystem& sys, Side side, int nu,
                       int max_degree);

}  // namespace semicross
