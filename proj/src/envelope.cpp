#include "semicross/envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "semicross/spectral.hpp"

namespace semicross {

namespace {

bool shift_route_kind(Side side, PairKind kind) {
  return side == Side::left
             ? (kind == PairKind::contractive || kind == PairKind::isometric)
             : (kind == PairKind::contractive || kind == PairKind::co_isometric);
}

std::string crossed_label(const FiniteSystem& perm) {
  const OrbitData data = orbit_data(perm);
  if (data.cycles.size() == 1) {
    const int p = data.cycles[0].length();
    if (p == 1) return "C(T)";
    return "M_" + std::to_string(p) + "(C(T))";
  }
  return "C(E) x|_sigma Z, |E| = " + std::to_string(perm.n) + ", " +
         std::to_string(data.cycles.size()) + " orbits";
}

}  // namespace

EnvelopeDescriptor envelope_of(const FiniteSystem& sys, Side side, PairKind kind) {
  validate(sys);
  EnvelopeDescriptor desc;
  desc.side = side;
  desc.kind = kind;
  desc.injective = sys.is_permutation();
  desc.permutation_system = quotient_system(sys);

  if (!desc.injective && shift_route_kind(side, kind)) {
    desc.shape = EnvelopeShape::full_corner;
    desc.tail = add_tail(sys, 1);
    desc.projection = "p = pi_hat(chi_X, 0), the unit of the base copy of C(X)";
    desc.label = "full corner p(B_inf x| Z)p of the crossed product over the tail extension";
  } else {
    desc.shape = EnvelopeShape::crossed_product;
    desc.label = "crossed product " + crossed_label(desc.permutation_system);
  }
  return desc;
}

std::vector<IdealWitness> fourier_invariant_ideals(const FiniteSystem& perm) {
  validate(perm);
  if (!perm.is_permutation())
    throw std::invalid_argument("fourier_invariant_ideals requires a permutation");

  std::vector<IdealWitness> out;
  for (const SubsetMask& s : invariant_subsets(perm, InvarianceMode::bi)) {
    IdealWitness w;
    w.kind = IdealWitness::Kind::invariant_subset;
    w.subset = s;
    w.description = "J x| Z for J the functions vanishing on the bi-invariant set " + s.to_string();
    out.push_back(std::move(w));
  }
  return out;
}

MinimalityReport minimality_report(const FiniteSystem& sys) {
  validate(sys);
  if (sys.n > kSubsetEnumerationLimit)
    throw std::invalid_argument("minimality report guarded at n <= 20");

  MinimalityReport report;
  report.injective = sys.is_permutation();
  report.base_minimal = is_minimal(sys);

  const TailSystem tail = add_tail(sys, 1);
  report.tail_minimal = is_minimal(tail.combined);
  if (tail.tail_count() > 0)
    report.tail_note = "tail T (" + std::to_string(tail.tail_count()) +
                       " points) is a beta-invariant ideal of the depth-1 truncation";

  // The direct limit of the tail extension: for injective maps it is (X, phi)
  // itself; otherwise the tail already obstructs bi-minimality.
  report.limit_bi_minimal = report.injective ? is_bi_minimal(sys) : false;

  const DirectLimit lim = direct_limit(sys);
  report.fourier_ideals_empty =
      report.injective ? fourier_invariant_ideals(lim.system).empty() : false;

  if (!report.base_minimal) {
    if (!report.injective) {
      IdealWitness w;
      w.kind = IdealWitness::Kind::invariant_subset;
      w.subset = SubsetMask{sys.n < 32 ? ((1u << sys.n) - 1u) : 0xffffffffu, tail.combined.n};
      w.description = "tail ideal c0(T): functions on the tail extension vanishing on X";
      report.witnesses.push_back(std::move(w));
    }
    for (const SubsetMask& s : invariant_subsets(lim.system, InvarianceMode::bi)) {
      IdealWitness w;
      w.kind = IdealWitness::Kind::invariant_subset;
      std::uint32_t bits = 0;
      for (int i = 0; i < lim.system.n; ++i)
        if (s.contains(i)) bits |= (1u << lim.points[static_cast<std::size_t>(i)]);
      w.subset = SubsetMask{bits, sys.n};
      w.description = "J x| Z for J vanishing on the bi-invariant set " + w.subset.to_string() +
                      " of the eventual image";
      report.witnesses.push_back(std::move(w));
    }
  }

  report.all_agree = (report.base_minimal == report.tail_minimal) &&
                     (report.base_minimal == report.limit_bi_minimal) &&
                     (report.base_minimal == report.fourier_ideals_empty);

  if (report.base_minimal && (!report.injective || tail.tail_count() != 0))
    throw std::logic_error("minimal system must be injective with empty tail");

  return report;
}

SimplicityReport simplicity_report(const FiniteSystem& sys) {
  validate(sys);
  SimplicityReport report;
  report.simple = false;

  if (!is_single_cycle(sys)) {
    // Not minimal: produce an invariant-subset witness.
    SubsetMask subset;
    if (sys.n <= kSubsetEnumerationLimit) {
      const auto subsets = invariant_subsets(sys, InvarianceMode::forward);
      subset = subsets.front();  // lexicographically smallest bitmask
    } else {
      const OrbitData data = orbit_data(sys);
      if (data.eventual_image.proper_nontrivial()) {
        subset = data.eventual_image;
      } else {
        std::uint32_t bits = 0;  // one full cycle; proper since not a single cycle
        for (int x : data.cycles[0].points) bits |= (1u << x);
        subset = SubsetMask{bits, sys.n};
      }
    }
    report.witness.kind = IdealWitness::Kind::invariant_subset;
    report.witness.subset = subset;
    report.witness.description = "nontrivial invariant subset " + subset.to_string();

    std::uint32_t image_bits = 0;
    for (int x = 0; x < sys.n; ++x)
      if (subset.contains(x)) image_bits |= (1u << sys.apply(x));
    report.witness_validated = (image_bits & ~subset.bits) == 0 && subset.proper_nontrivial();
    report.validation_residual = report.witness_validated ? 0.0 : 1.0;
    return report;
  }

  // Minimal single cycle: the evaluation kernel at z0 = 1 is a proper
  // two-sided ideal of the crossed product M_p(C(T)).
  report.witness.kind = IdealWitness::Kind::symbol_evaluation;
  report.witness.orbit = 0;
  report.witness.z0 = Cplx(1.0);
  report.witness.description =
      "kernel of evaluation at z0 = 1 of the single-orbit symbol (proper two-sided ideal)";

  const int p = sys.n;
  CrossedElement g = ce_sub(crossed_monomial(sys, 0, ones(p)), crossed_monomial(sys, p, ones(p)));

  auto eval_at_one = [&](const CrossedElement& e) {
    const SymbolOperator sym = symbol_rep(sys, e.coeffs);
    return spectral_norm_dense(sym.blocks.front().eval(Cplx(1.0)));
  };

  double residual = eval_at_one(g);  // witness element lies in the kernel

  // Kernel is an ideal: multiplying by generators keeps the evaluation zero.
  std::vector<CrossedElement> generators;
  generators.push_back(crossed_monomial(sys, 1, ones(p)));
  for (int i = 0; i < sys.n; ++i) {
    Fn chi(static_cast<std::size_t>(sys.n), Cplx(0.0));
    chi[static_cast<std::size_t>(i)] = 1.0;
    generators.push_back(crossed_monomial(sys, 0, std::move(chi)));
  }
  for (const CrossedElement& h : generators) {
    residual = std::max(residual, eval_at_one(ce_mul(h, g)));
    residual = std::max(residual, eval_at_one(ce_mul(g, h)));
  }

  const double unit_at_one = eval_at_one(crossed_monomial(sys, 0, ones(p)));
  const double g_norm = symbol_norm(g, 1e-8).lower_bound;

  report.validation_residual = residual;
  report.witness_validated = residual <= 1e-10 && unit_at_one > 0.5 && g_norm > 0.5;
  return report;
}

Poly zero_extend(const TailSystem& tail, const Poly& f) {
  if (f.sys != tail.base) throw std::invalid_argument("polynomial does not live on the base system");
  Poly out = zero_poly(tail.combined, f.side);
  for (const auto& [n, c] : f.coeffs) {
    Fn extended(static_cast<std::size_t>(tail.combined.n), Cplx(0.0));
    std::copy(c.begin(), c.end(), extended.begin());
    out.coeffs.emplace(n, std::move(extended));
  }
  canonicalize(out);
  return out;
}

CornerReport corner_consistency_check(const FiniteSystem& sys, const Poly& f, int tail_depth,
                                      double tol, const NormOptions& opts) {
  if (tail_depth < 1) throw std::invalid_argument("tail depth must be >= 1");
  CornerReport report;
  report.tail_depth = tail_depth;
  report.tolerance = 2.0 * tol;

  const TailSystem tail = add_tail(sys, tail_depth);
  report.base_norm = shift_norm(sys, f, tol, opts);
  report.tail_norm = shift_norm(tail.combined, zero_extend(tail, f), tol, opts);
  report.difference = std::abs(report.base_norm.value - report.tail_norm.value);
  report.consistent = report.difference <= report.tolerance;
  return report;
}

}  // namespace semicross
