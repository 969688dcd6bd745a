#include "giz/configinv.hpp"

#include <algorithm>

#include "giz/error.hpp"

namespace giz {

SymmetryData symmetry_group(const PointSet& a) {
  SymmetryData out;
  if (a.empty()) return out;

  // Every stabilizing alpha maps a[0] somewhere in A, so the candidate set
  // {b / a[0] : b in A} is complete.
  std::vector<CStarPoint> group;
  for (const auto& b : a) {
    CStarPoint alpha = b / a[0];
    if (scale_set(alpha, a) == a) group.push_back(alpha);
  }
  std::sort(group.begin(), group.end(), cstar_less);
  out.d = static_cast<long>(group.size());
  out.group = group;

  // Structural fact: G(A) is the group of d-th roots of unity.
  for (const auto& g : group)
    if (g.modulus != 1 || normalize_angle(g.angle * Rat(out.d)) != 0)
      throw TheoryError("stabilizer of a finite set is not a root-of-unity group");

  std::vector<bool> used(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (used[i]) continue;
    std::vector<CStarPoint> orbit;
    for (const auto& g : group) orbit.push_back(g * a[i]);
    orbit = make_point_set(std::move(orbit));
    if (static_cast<long>(orbit.size()) != out.d)
      throw TheoryError("stabilizer orbit is not free");
    for (const auto& p : orbit) {
      auto it = std::lower_bound(a.begin(), a.end(), p, cstar_less);
      used[it - a.begin()] = true;
    }
    out.orbits.push_back(std::move(orbit));
  }
  out.m = static_cast<long>(out.orbits.size());
  if (out.m * out.d != static_cast<long>(a.size()))
    throw TheoryError("orbit decomposition does not tile the set");
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& x, const auto& y) { return cstar_less(x.front(), y.front()); });
  return out;
}

std::optional<CStarPoint> star_class_equal(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return CStarPoint{Rat(1), Rat(0)};
  std::optional<CStarPoint> best;
  for (const auto& target : b) {
    CStarPoint alpha = target / a[0];
    if (scale_set(alpha, a) != b) continue;
    if (!best || cstar_less(alpha, *best)) best = alpha;
  }
  return best;
}

std::optional<std::pair<RatComplex, RatComplex>> plus_class_equal(
    const std::vector<RatComplex>& a_in, const std::vector<RatComplex>& b_in) {
  auto canon = [](std::vector<RatComplex> v) {
    std::sort(v.begin(), v.end(), rc_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto a = canon(a_in), b = canon(b_in);
  if (a.size() != b.size()) return std::nullopt;
  const RatComplex one{Rat(1), Rat(0)}, zero{Rat(0), Rat(0)};
  if (a.empty()) return std::make_pair(one, zero);
  if (a.size() == 1) return std::make_pair(one, b[0] - a[0]);

  auto apply = [&](const RatComplex& s, const RatComplex& t) {
    std::vector<RatComplex> out;
    out.reserve(a.size());
    for (const auto& p : a) out.push_back(s * p + t);
    return canon(out);
  };

  std::optional<std::pair<RatComplex, RatComplex>> best;
  for (const auto& b1 : b)
    for (const auto& b2 : b) {
      if (b1 == b2) continue;
      // Send a[0] -> b1 and a[1] -> b2.
      RatComplex s = (b1 - b2) / (a[0] - a[1]);
      if (s == zero) continue;
      RatComplex t = b1 - s * a[0];
      if (apply(s, t) != b) continue;
      auto cand = std::make_pair(s, t);
      auto less = [](const auto& x, const auto& y) {
        if (!(x.first == y.first)) return rc_less(x.first, y.first);
        return rc_less(x.second, y.second);
      };
      if (!best || less(cand, *best)) best = cand;
    }
  return best;
}

SelfReversed q_self_reversed(const ExtendedDivisor& d) {
  validate(d);
  SelfReversed out;
  const int n = d.n();

  if (!is_palindrome_tail(d.chain)) {
    out.reason = "tail is not a palindrome";
    return out;
  }
  for (int i = 2; i <= n; ++i) {
    int idual = n + 2 - i;
    if (d.r(i) != d.r(idual)) {
      out.reason = "feather counts differ at C_" + std::to_string(i) + " and C_" + std::to_string(idual);
      return out;
    }
  }

  for (int i = 3; i <= n - 1; ++i) {
    int idual = n + 2 - i;
    if (i > idual) continue;
    if (i == idual) {
      out.gamma.emplace(i, CStarPoint{Rat(1), Rat(0)});
      continue;
    }
    int depth = std::max(d.max_tail_len(i), d.max_tail_len(idual));
    // A single gamma must identify every depth layer at once; candidates come
    // from the first nonempty layer (any valid gamma shows up there).
    std::vector<CStarPoint> candidates;
    bool any = false;
    for (int s = 0; s <= depth && !any; ++s) {
      PointSet as = d.base_points(i, s), bs = d.base_points(idual, s);
      if (as.empty() && bs.empty()) continue;
      any = true;
      if (as.size() != bs.size()) {
        out.reason = "layer sizes differ at depth " + std::to_string(s) + " for the pair (C_" +
                     std::to_string(i) + ", C_" + std::to_string(idual) + ")";
        return out;
      }
      for (const auto& b : bs) candidates.push_back(b / as[0]);
    }
    if (!any) {
      out.gamma.emplace(i, CStarPoint{Rat(1), Rat(0)});
      continue;
    }
    std::optional<CStarPoint> found;
    for (const auto& g : candidates) {
      bool ok = true;
      for (int s = 0; s <= depth && ok; ++s)
        ok = scale_set(g, d.base_points(i, s)) == d.base_points(idual, s);
      if (ok && (!found || cstar_less(g, *found))) found = g;
    }
    if (!found) {
      out.reason = "no single scaling identifies the layers of C_" + std::to_string(i) +
                   " with C_" + std::to_string(idual);
      return out;
    }
    out.gamma.emplace(i, *found);
  }
  out.equal = true;
  return out;
}

}  // namespace giz
