// C*-envelope identification, Fourier-invariant-ideal analysis,
// minimality/simplicity verdicts, and the tail/full-corner consistency
// checks.

#pragma once

#include <string>
#include <vector>

#include "semicross/algebra.hpp"
#include "semicross/norms.hpp"

namespace semicross {

enum class EnvelopeShape { crossed_product, full_corner };

/// Which crossed product (or full corner of one) the envelope is, per side
/// and pair kind. Injective systems always yield a crossed product over
/// (E, sigma) = (X, phi); for non-injective systems the contractive and
/// isometric collections on the element's own side yield the full corner of
/// the crossed product over the tail extension, cut by the projection onto
/// the base copy of X.
struct EnvelopeDescriptor {
  Side side = Side::left;
  PairKind kind = PairKind::contractive;
  EnvelopeShape shape = EnvelopeShape::crossed_product;
  FiniteSystem permutation_system;  // (E, sigma), re-indexed
  bool injective = false;
  TailSystem tail;                  // populated for full_corner (depth 1 truncation shown)
  std::string projection;           // corner projection, for full_corner
  std::string label;                // human-readable identification
};

EnvelopeDescriptor envelope_of(const FiniteSystem& sys, Side side, PairKind kind);

/// Witness for a nontrivial Fourier-invariant ideal.
struct IdealWitness {
  enum class Kind { invariant_subset, symbol_evaluation } kind = Kind::invariant_subset;
  SubsetMask subset;       // invariant_subset: bi-invariant vanishing set
  int orbit = -1;          // symbol_evaluation: orbit index
  Cplx z0 = Cplx(1.0);     // symbol_evaluation: evaluation point on the circle
  std::string description;
};

/// One witness per nontrivial bi-invariant subset of a permutation system;
/// empty exactly when the permutation is a single cycle.
std::vector<IdealWitness> fourier_invariant_ideals(const FiniteSystem& perm);

/// The four equivalent minimality conditions, evaluated independently:
/// base minimality, minimality of the (depth-1 truncated) tail system,
/// bi-minimality of the direct limit of the tail extension, and emptiness of
/// the Fourier-invariant-ideal list of the envelope crossed product. For a
/// non-injective map the tail itself provides the ideal obstructing the last
/// three conditions.
struct MinimalityReport {
  bool base_minimal = false;
  bool tail_minimal = false;
  bool limit_bi_minimal = false;
  bool fourier_ideals_empty = false;
  bool all_agree = false;
  bool injective = false;
  std::vector<IdealWitness> witnesses;  // nonempty iff not minimal
  std::string tail_note;                // names the tail ideal when present
};

MinimalityReport minimality_report(const FiniteSystem& sys);

/// Finite systems never produce a simple envelope. The witness is a
/// nontrivial invariant subset when the system is not minimal; otherwise the
/// kernel of evaluating the single-orbit symbol at z0 = 1, validated by
/// checking at the symbol level that the kernel is a proper two-sided ideal.
struct SimplicityReport {
  bool simple = false;
  IdealWitness witness;
  bool witness_validated = false;
  double validation_residual = 0.0;
};

SimplicityReport simplicity_report(const FiniteSystem& sys);

/// The norm-level consequence of the full-corner theorem: the left
/// contractive norm over (X, phi) equals the norm of the zero-extended
/// element over the depth-K truncated tail system.
struct CornerReport {
  int tail_depth = 0;
  NormResult base_norm;
  NormResult tail_norm;
  double difference = 0.0;
  double tolerance = 0.0;  // comparison threshold (2 * engine tol)
  bool consistent = false;
};

CornerReport corner_consistency_check(const FiniteSystem& sys, const Poly& f, int tail_depth,
                                      double tol, const NormOptions& opts = {});

/// Zero-extension of a polynomial over the base system to the combined tail
/// system (coefficients vanish on all tail points).
Poly zero_extend(const TailSystem& tail, const Poly& f);

}  // namespace semicross
