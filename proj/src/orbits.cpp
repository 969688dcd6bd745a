#include "giz/orbits.hpp"

#include <algorithm>
#include <map>

#include "giz/error.hpp"

namespace giz {
namespace {

// Reflection pairing component i with its mirror under reversion.
int refl(int n, int i) { return n + 2 - i; }

// Layer-respecting symmetry of the base points of C_i: the roots of unity
// that preserve every tail-length layer A_{i,s} separately (a scaling that
// mixed layers would not come from a surface automorphism).  Returns the
// group order together with the orbit list, layers kept apart, each orbit
// sorted, ordered by (layer, smallest point).
struct LayeredSymmetry {
  long order = 0;                // |G|; 0 when there are no points at all
  long total_points = 0;
  std::vector<PointSet> orbits;
};

LayeredSymmetry layered_symmetry(const ExtendedDivisor& d, int i) {
  LayeredSymmetry out;
  std::vector<PointSet> layers;
  for (int s = 0; s <= d.max_tail_len(i); ++s) {
    PointSet a = d.base_points(i, s);
    if (!a.empty()) layers.push_back(std::move(a));
  }
  if (layers.empty()) return out;

  // Candidates from the first layer, filtered by the others.
  SymmetryData base = symmetry_group(layers.front());
  std::vector<CStarPoint> group;
  for (const CStarPoint& alpha : base.group) {
    bool keeps_all = true;
    for (std::size_t s = 1; s < layers.size() && keeps_all; ++s)
      keeps_all = (scale_set(alpha, layers[s]) == layers[s]);
    if (keeps_all) group.push_back(alpha);
  }
  if (group.empty()) throw TheoryError("layer stabilizer lost the identity");
  out.order = static_cast<long>(group.size());

  for (const PointSet& layer : layers) {
    if (layer.size() % group.size() != 0)
      throw TheoryError("layer size is not a multiple of the stabilizer order");
    out.total_points += static_cast<long>(layer.size());
    std::vector<bool> used(layer.size(), false);
    for (std::size_t p = 0; p < layer.size(); ++p) {
      if (used[p]) continue;
      PointSet orbit;
      for (const CStarPoint& alpha : group) {
        CStarPoint q = alpha * layer[p];
        auto it = std::lower_bound(layer.begin(), layer.end(), q, cstar_less);
        if (it == layer.end() || !(*it == q))
          throw TheoryError("stabilizer element escaped its layer");
        used[it - layer.begin()] = true;
        orbit.push_back(q);
      }
      std::sort(orbit.begin(), orbit.end(), cstar_less);
      out.orbits.push_back(std::move(orbit));
    }
  }
  return out;
}

}  // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Transitive: return "Transitive";
    case Verdict::NotTransitive: return "NotTransitive";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

OrbitReport orbit_decomposition(const ExtendedDivisor& d) {
  validate(d);
  if (!condition_star(d))
    throw ValidationError(
        "orbit decomposition requires the star condition: r_2 = r_n = 0 and "
        "every inner component of *-type");

  const int n = d.n();
  OrbitReport out;
  std::set<int> e = exceptional_union(d);
  out.exceptional.assign(e.begin(), e.end());

  SelfReversed q = q_self_reversed(d);
  out.self_reversed = q.equal;

  if (q.equal) {
    // The reversed surface is the same surface: the exceptional set must be
    // closed under the reflection, and for even n the self-mirrored middle
    // component must already be exceptional.
    for (int idx : e)
      if (!e.count(refl(n, idx)))
        throw TheoryError("exceptional set of a self-reversed divisor is not mirror-closed");
    if (n % 2 == 0) {
      int mid = (n + 2) / 2;
      if (mid >= 3 && mid <= n - 1 && !e.count(mid))
        throw TheoryError("middle component of a self-reversed divisor is not exceptional");
    }
  }

  for (int i = 3; i <= n - 1; ++i) {
    if (e.count(i)) continue;
    if (d.r(i) == 0) continue;
    if (q.equal && i > refl(n, i)) continue;  // handled with its mirror
    LayeredSymmetry sym = layered_symmetry(d, i);
    for (const PointSet& orbit : sym.orbits) {
      OrbitPart part;
      part.components = {i};
      if (q.equal && refl(n, i) != i) part.components.push_back(refl(n, i));
      std::sort(part.components.begin(), part.components.end());
      part.points = orbit;
      out.parts.push_back(std::move(part));
    }
    if (!q.equal && sym.order == 1) out.fixed_points += sym.total_points;
  }

  out.verdict = out.parts.empty() ? Verdict::Transitive : Verdict::NotTransitive;
  out.orbit_count = static_cast<long long>(out.parts.size()) + 1;
  if (out.verdict == Verdict::Transitive) {
    out.exact = true;
  } else {
    int feathered_inner = 0;
    for (int i = 3; i <= n - 1; ++i)
      if (d.r(i) > 0) ++feathered_inner;
    out.exact = (feathered_inner == 1);
  }
  return out;
}

std::vector<int> feathers_on_exceptional_in_O(const ExtendedDivisor& d) {
  validate(d);
  std::set<int> e = exceptional_union(d);
  std::vector<int> out;
  for (int idx : e)
    if (d.r(idx) > 0) out.push_back(idx);
  return out;
}

long long big_orbit_complement_bound(const OrbitReport& r) {
  return static_cast<long long>(r.parts.size());
}

std::string orbit_report_str(const OrbitReport& r) {
  std::string s = "verdict: " + verdict_str(r.verdict);
  s += "; fixed points: " + std::to_string(r.fixed_points);
  s += "; orbits: ";
  if (r.exact)
    s += std::to_string(r.orbit_count) + " (exact)";
  else
    s += ">= " + std::to_string(r.orbit_count);
  return s;
}

}  // namespace giz
