// Finite topological dynamical systems (X, phi): orbit structure, eventual
// image, invariant sets, minimality notions, tail and projective-limit
// constructions.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semicross {

/// A finite point set {0..n-1} together with a total self-map phi.
/// Functions on X are acted on by alpha(f) = f . phi.
struct FiniteSystem {
  int n = 0;
  std::vector<int> phi;

  FiniteSystem() = default;
  FiniteSystem(int size, std::vector<int> map);

  int apply(int x) const { return phi[static_cast<std::size_t>(x)]; }
  int apply_iter(int x, int steps) const;

  bool is_permutation() const;
  bool operator==(const FiniteSystem& other) const = default;
};

/// Throws std::invalid_argument if the map is not a total map on {0..n-1}.
void validate(const FiniteSystem& sys);

/// Subset of {0..n-1} as a bitmask. Width always equals the system size;
/// enumeration-based operations are guarded at n <= 20.
struct SubsetMask {
  std::uint32_t bits = 0;
  int width = 0;

  bool contains(int x) const { return (bits >> x) & 1u; }
  int count() const;
  bool empty() const { return bits == 0; }
  bool full() const;
  bool proper_nontrivial() const { return !empty() && !full(); }
  std::vector<int> points() const;
  std::string to_string() const;

  bool operator==(const SubsetMask&) const = default;
};

constexpr int kSubsetEnumerationLimit = 20;

/// One cycle of the functional graph, listed in map order:
/// points[(i+1) % length] == phi(points[i]).
struct Cycle {
  std::vector<int> points;
  int length() const { return static_cast<int>(points.size()); }
};

/// Functional-graph decomposition of a finite system.
struct OrbitData {
  std::vector<int> preperiod;  // steps until the orbit enters a cycle
  std::vector<int> cycle_id;   // cycle eventually reached
  std::vector<int> cycle_pos;  // position of phi^preperiod(x) inside that cycle
  std::vector<Cycle> cycles;
  SubsetMask eventual_image;   // union of all cycle points

  int period_of(int x) const { return cycles[static_cast<std::size_t>(cycle_id[static_cast<std::size_t>(x)])].length(); }
};

OrbitData orbit_data(const FiniteSystem& sys);

/// Support of the radical ideal: complement of the eventual image.
/// A function lies in the radical iff it vanishes on the eventual image,
/// iff alpha^n kills it for n >= size.
SubsetMask radical_support(const FiniteSystem& sys);

/// (E, sigma): restriction of phi to the eventual image E, re-indexed by
/// listing E in increasing order. Always a permutation.
FiniteSystem quotient_system(const FiniteSystem& sys);

/// Finite realization of the direct-limit system: the permutation system
/// (E, sigma) together with the re-indexing. `points[i]` is the original
/// index of new point i; `index_of[x]` is the new index of x (-1 off E).
/// Under the identification f |-> f|_E the limit automorphism acts as
/// g |-> g . sigma, and restricted to an injective system it equals alpha.
struct DirectLimit {
  FiniteSystem system;
  std::vector<int> points;
  std::vector<int> index_of;
};

DirectLimit direct_limit(const FiniteSystem& sys);

enum class InvarianceMode { forward, bi };

/// All nonempty proper subsets S with phi(S) subset of S (forward) or
/// phi(S) == S (bi; permutations only). Exhaustive over 2^n subsets,
/// guarded at n <= 20. The trivial subsets (empty, full) are always
/// invariant and are not listed.
std::vector<SubsetMask> invariant_subsets(const FiniteSystem& sys, InvarianceMode mode);

/// Fast path: phi is a permutation consisting of one cycle covering X.
bool is_single_cycle(const FiniteSystem& sys);

/// No nontrivial forward-invariant subsets. Evaluated by enumeration when
/// n <= 20 and cross-checked against the single-cycle fast path; for larger
/// systems only the fast path is used.
bool is_minimal(const FiniteSystem& sys);

/// No nontrivial bi-invariant subsets; requires a permutation.
bool is_bi_minimal(const FiniteSystem& sys);

/// Finite nonempty systems always fail topological freeness: some point is
/// periodic. Returns the witness (a point on a shortest cycle, its period).
struct FreenessReport {
  bool topologically_free = false;
  int witness_point = -1;
  int witness_period = 0;
};

FreenessReport is_topologically_free(const FiniteSystem& sys);

/// Truncated tail extension. Points of the combined system are the base
/// points 0..n-1 followed by tail points (u, k) for u in U = X \ phi(X)
/// and k = -1..-depth, with phi^T(u,k) = (u,k+1) for k < -1 and
/// phi^T(u,-1) = u. When U is empty the combined system equals the base.
struct TailSystem {
  FiniteSystem base;
  int depth = 0;
  FiniteSystem combined;
  std::vector<int> tail_u;              // per tail point, its source u
  std::vector<int> tail_k;              // per tail point, its level (negative)
  std::vector<std::string> labels;      // per combined point: "3" or "0:-2"

  int tail_count() const { return combined.n - base.n; }
};

TailSystem add_tail(const FiniteSystem& sys, int depth);

/// Inverse-limit realization for surjective (hence bijective) phi: the space
/// of backward orbits is conjugate to (X, phi) itself via head extraction.
/// `head[i]` names the base point under the conjugacy (the identity map once
/// backward orbits are indexed by their heads); `backward_orbit(x)` solves
/// x_{m+1} = phi^{-1}(x_m) explicitly.
struct ProjectiveLimit {
  FiniteSystem system;
  std::vector<int> head;
};

ProjectiveLimit projective_limit(const FiniteSystem& sys);

/// The explicit backward orbit (x, phi^{-1}(x), phi^{-2}(x), ...) of length
/// `steps`; requires a permutation.
std::vector<int> backward_orbit(const FiniteSystem& sys, int x, int steps);

/// All n^n maps on {0..n-1}, in lexicographic order of their phi tables.
std::vector<FiniteSystem> all_systems(int n);

/// All n! permutations of {0..n-1}.
std::vector<FiniteSystem> all_permutations(int n);

}  // namespace semicross
