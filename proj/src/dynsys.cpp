#include "semicross/dynsys.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace semicross {

FiniteSystem::FiniteSystem(int size, std::vector<int> map) : n(size), phi(std::move(map)) {
  validate(*this);
}

int FiniteSystem::apply_iter(int x, int steps) const {
  for (int i = 0; i < steps; ++i) x = apply(x);
  return x;
}

bool FiniteSystem::is_permutation() const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : phi) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

void validate(const FiniteSystem& sys) {
  if (sys.n <= 0) throw std::invalid_argument("system size must be positive");
  if (static_cast<int>(sys.phi.size()) != sys.n)
    throw std::invalid_argument("phi table length does not match system size");
  for (int v : sys.phi)
    if (v < 0 || v >= sys.n) throw std::invalid_argument("phi value out of range");
}

int SubsetMask::count() const { return std::popcount(bits); }

bool SubsetMask::full() const {
  return width < 32 ? bits == ((1u << width) - 1u) : bits == 0xffffffffu;
}

std::vector<int> SubsetMask::points() const {
  std::vector<int> out;
  for (int i = 0; i < width; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < width; ++i) {
    if (!contains(i)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

OrbitData orbit_data(const FiniteSystem& sys) {
  validate(sys);
  const int n = sys.n;
  OrbitData data;
  data.preperiod.assign(static_cast<std::size_t>(n), -1);
  data.cycle_id.assign(static_cast<std::size_t>(n), -1);
  data.cycle_pos.assign(static_cast<std::size_t>(n), -1);

  // A point is cyclic iff it survives n iterations of the image map.
  std::vector<char> cyclic(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) cyclic[static_cast<std::size_t>(sys.apply_iter(x, n))] = 1;

  std::uint32_t image_bits = 0;
  for (int x = 0; x < n; ++x) {
    if (!cyclic[static_cast<std::size_t>(x)] || data.cycle_id[static_cast<std::size_t>(x)] >= 0) continue;
    Cycle cyc;
    int y = x;
    do {
      data.cycle_id[static_cast<std::size_t>(y)] = static_cast<int>(data.cycles.size());
      data.cycle_pos[static_cast<std::size_t>(y)] = cyc.length();
      data.preperiod[static_cast<std::size_t>(y)] = 0;
      image_bits |= (1u << y);
      cyc.points.push_back(y);
      y = sys.apply(y);
    } while (y != x);
    data.cycles.push_back(std::move(cyc));
  }

  for (int x = 0; x < n; ++x) {
    if (data.preperiod[static_cast<std::size_t>(x)] == 0) continue;
    int steps = 0;
    int y = x;
    while (!cyclic[static_cast<std::size_t>(y)]) {
      y = sys.apply(y);
      ++steps;
    }
    data.preperiod[static_cast<std::size_t>(x)] = steps;
    data.cycle_id[static_cast<std::size_t>(x)] = data.cycle_id[static_cast<std::size_t>(y)];
    data.cycle_pos[static_cast<std::size_t>(x)] = data.cycle_pos[static_cast<std::size_t>(y)];
  }

  data.eventual_image = SubsetMask{image_bits, n};
  return data;
}

SubsetMask radical_support(const FiniteSystem& sys) {
  const SubsetMask image = orbit_data(sys).eventual_image;
  std::uint32_t all = (sys.n < 32) ? ((1u << sys.n) - 1u) : 0xffffffffu;
  return SubsetMask{all & ~image.bits, sys.n};
}

FiniteSystem quotient_system(const FiniteSystem& sys) { return direct_limit(sys).system; }

DirectLimit direct_limit(const FiniteSystem& sys) {
  const OrbitData data = orbit_data(sys);
  DirectLimit lim;
  lim.points = data.eventual_image.points();
  lim.index_of.assign(static_cast<std::size_t>(sys.n), -1);
  for (std::size_t i = 0; i < lim.points.size(); ++i)
    lim.index_of[static_cast<std::size_t>(lim.points[i])] = static_cast<int>(i);
  std::vector<int> sigma(lim.points.size());
  for (std::size_t i = 0; i < lim.points.size(); ++i)
    sigma[i] = lim.index_of[static_cast<std::size_t>(sys.apply(lim.points[i]))];
  lim.system = FiniteSystem(static_cast<int>(lim.points.size()), std::move(sigma));
  return lim;
}

std::vector<SubsetMask> invariant_subsets(const FiniteSystem& sys, InvarianceMode mode) {
  validate(sys);
  if (sys.n > kSubsetEnumerationLimit)
    throw std::invalid_argument("subset enumeration guarded at n <= 20");
  if (mode == InvarianceMode::bi && !sys.is_permutation())
    throw std::invalid_argument("bi-invariance requires a permutation");

  std::vector<SubsetMask> out;
  const std::uint32_t limit = 1u << sys.n;
  for (std::uint32_t bits = 1; bits + 1 < limit; ++bits) {
    std::uint32_t image = 0;
    for (int x = 0; x < sys.n; ++x)
      if ((bits >> x) & 1u) image |= (1u << sys.apply(x));
    const bool ok = (mode == InvarianceMode::forward) ? ((image & ~bits) == 0) : (image == bits);
    if (ok) out.push_back(SubsetMask{bits, sys.n});
  }
  return out;
}

bool is_single_cycle(const FiniteSystem& sys) {
  if (!sys.is_permutation()) return false;
  const OrbitData data = orbit_data(sys);
  return data.cycles.size() == 1 && data.cycles[0].length() == sys.n;
}

bool is_minimal(const FiniteSystem& sys) {
  const bool fast = is_single_cycle(sys);
  if (sys.n <= kSubsetEnumerationLimit) {
    const bool enumerated = invariant_subsets(sys, InvarianceMode::forward).empty();
    if (enumerated != fast) throw std::logic_error("minimality routes disagree");
    return enumerated;
  }
  return fast;
}

bool is_bi_minimal(const FiniteSystem& sys) {
  if (!sys.is_permutation()) throw std::invalid_argument("bi-minimality requires a permutation");
  if (sys.n <= kSubsetEnumerationLimit)
    return invariant_subsets(sys, InvarianceMode::bi).empty();
  return orbit_data(sys).cycles.size() == 1;
}

FreenessReport is_topologically_free(const FiniteSystem& sys) {
  const OrbitData data = orbit_data(sys);
  FreenessReport report;
  report.topologically_free = false;  // pigeonhole: some point is periodic
  const Cycle* best = nullptr;
  for (const Cycle& c : data.cycles)
    if (best == nullptr || c.length() < best->length()) best = &c;
  report.witness_point = best->points.front();
  report.witness_period = best->length();
  return report;
}

TailSystem add_tail(const FiniteSystem& sys, int depth) {
  validate(sys);
  if (depth < 1) throw std::invalid_argument("tail depth must be >= 1");

  std::vector<char> in_image(static_cast<std::size_t>(sys.n), 0);
  for (int v : sys.phi) in_image[static_cast<std::size_t>(v)] = 1;
  std::vector<int> u_points;
  for (int x = 0; x < sys.n; ++x)
    if (!in_image[static_cast<std::size_t>(x)]) u_points.push_back(x);

  TailSystem tail;
  tail.base = sys;
  tail.depth = depth;

  const int total = sys.n + depth * static_cast<int>(u_points.size());
  std::vector<int> map(static_cast<std::size_t>(total));
  for (int x = 0; x < sys.n; ++x) map[static_cast<std::size_t>(x)] = sys.apply(x);
  tail.labels.reserve(static_cast<std::size_t>(total));
  for (int x = 0; x < sys.n; ++x) tail.labels.push_back(std::to_string(x));

  // Tail point (u, k) sits at index n + iu*depth + (-k - 1).
  for (std::size_t iu = 0; iu < u_points.size(); ++iu) {
    for (int j = 0; j < depth; ++j) {
      const int k = -1 - j;
      const int idx = sys.n + static_cast<int>(iu) * depth + j;
      map[static_cast<std::size_t>(idx)] = (k == -1) ? u_points[iu] : idx - 1;
      tail.tail_u.push_back(u_points[iu]);
      tail.tail_k.push_back(k);
      tail.labels.push_back(std::to_string(u_points[iu]) + ":" + std::to_string(k));
    }
  }

  tail.combined = FiniteSystem(total, std::move(map));
  return tail;
}

std::vector<int> backward_orbit(const FiniteSystem& sys, int x, int steps) {
  if (!sys.is_permutation()) throw std::invalid_argument("backward orbit requires a permutation");
  std::vector<int> inverse(static_cast<std::size_t>(sys.n));
  for (int y = 0; y < sys.n; ++y) inverse[static_cast<std::size_t>(sys.apply(y))] = y;
  std::vector<int> orbit{x};
  for (int i = 0; i < steps; ++i) orbit.push_back(inverse[static_cast<std::size_t>(orbit.back())]);
  return orbit;
}

ProjectiveLimit projective_limit(const FiniteSystem& sys) {
  validate(sys);
  if (!sys.is_permutation())
    throw std::invalid_argument("projective limit requires surjective phi");
  // Backward orbits are determined by their heads; the head map conjugates
  // the shifted system back to (X, phi).
  ProjectiveLimit lim;
  lim.system = sys;
  lim.head.resize(static_cast<std::size_t>(sys.n));
  std::iota(lim.head.begin(), lim.head.end(), 0);
  return lim;
}

std::vector<FiniteSystem> all_systems(int n) {
  std::vector<FiniteSystem> out;
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(n, map);
    int i = n - 1;
    while (i >= 0 && map[static_cast<std::size_t>(i)] == n - 1) {
      map[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++map[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<FiniteSystem> all_permutations(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  std::vector<FiniteSystem> out;
  do {
    out.emplace_back(n, map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

}  // namespace semicross
