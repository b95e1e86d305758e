// Test-only oracles, kept independent of the engine paths they check.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdint>
#include <numbers>

#include "semicross/algebra.hpp"
#include "semicross/reps.hpp"

namespace semicross::test {

// Eventual image by literal iteration of the image set.
inline SubsetMask eventual_image_brute(const FiniteSystem& sys) {
  std::uint32_t current = sys.n < 32 ? ((1u << sys.n) - 1u) : 0xffffffffu;
  for (int step = 0; step < sys.n; ++step) {
    std::uint32_t next = 0;
    for (int x = 0; x < sys.n; ++x)
      if ((current >> x) & 1u) next |= 1u << sys.apply(x);
    current = next;
  }
  return SubsetMask{current, sys.n};
}

// Plain dense-SVD sup over a uniform grid; defines ground truth for the
// certified circle engine.
inline double fine_grid_sup(const SymbolOperator& sym, int grid) {
  double best = 0.0;
  for (int g = 0; g < grid; ++g) {
    const double theta = 2.0 * std::numbers::pi * g / grid;
    for (const OrbitSymbol& blk : sym.blocks) {
      const Eigen::MatrixXcd a = blk.eval(std::polar(1.0, theta));
      best = std::max(best, Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0));
    }
  }
  return best;
}

inline Eigen::MatrixXcd dense_of(const TruncatedOperator& op) { return op.mat; }

inline double dense_sigma_max(const Eigen::MatrixXcd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
}

}  // namespace semicross::test
