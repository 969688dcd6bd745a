#pragma once

// Orbit decomposition of the automorphism group acting on a surface
// described by an extended divisor.
//
// The action is analyzed through the base points of the feathers attached
// to the inner components of the boundary zigzag.  Components that belong
// to the exceptional set E (together with their duals) are absorbed into a
// single big orbit O; every remaining feathered inner component C_i
// contributes "small" orbit parts, one per orbit of the symmetry group
// G(A_i) acting on its base-point set A_i.
//
// Two regimes:
//  * Q != Q-reversed: the parts of distinct components stay separate, and
//    each component with trivial symmetry group (d = 1) contributes its
//    points as fixed points of the whole action.
//  * Q == Q-reversed: the reversing symmetry identifies component i with
//    its mirror i-dual = n + 2 - i; the parts of a mirror pair are glued
//    via the scaling constant gamma_i, and no fixed points remain.
//
// The verdict is Transitive exactly when no small parts survive.  The
// Undetermined verdict is reserved for inputs whose analysis falls outside
// the implemented criteria; valid inputs always resolve.

#include <string>
#include <vector>

#include "giz/configinv.hpp"
#include "giz/extdiv.hpp"

namespace giz {

enum class Verdict { Transitive, NotTransitive, Undetermined };

std::string verdict_str(Verdict v);

// One small orbit part: the points of the G(A_i)-orbit `points` on
// component(s) `components` (one component, or a glued mirror pair).
struct OrbitPart {
  std::vector<int> components;  // sorted, 1 or 2 entries
  PointSet points;              // representative base points on the first component
};

struct OrbitReport {
  Verdict verdict = Verdict::Undetermined;
  bool self_reversed = false;     // whether Q == Q-reversed glued mirror parts
  std::vector<OrbitPart> parts;   // small parts outside the big orbit
  long long fixed_points = 0;     // points fixed by the whole group
  bool exact = false;             // whether the orbit count is exact
  long long orbit_count = 0;      // exact count, or a lower bound when !exact
  std::vector<int> exceptional;   // E: components absorbed into the big orbit
};

// Decompose the action for a divisor satisfying the star condition.
// Throws ValidationError when the divisor fails validation or the star
// condition; throws TheoryError when an internal consistency check fails.
OrbitReport orbit_decomposition(const ExtendedDivisor& d);

// Components of E that carry at least one feather.  The base points of
// these feathers automatically lie in the big orbit O.
std::vector<int> feathers_on_exceptional_in_O(const ExtendedDivisor& d);

// Lower bound for the number of orbits in the complement of the big
// orbit's closure.  Equals the number of small parts; exact only when the
// report is exact.
long long big_orbit_complement_bound(const OrbitReport& r);

// One-line human-readable summary, e.g.
//   "verdict: NotTransitive; fixed points: 1; orbits: 2 (exact)"
//   "verdict: NotTransitive; fixed points: 0; orbits: >= 3"
//   "verdict: Transitive; fixed points: 0; orbits: 1 (exact)"
std::string orbit_report_str(const OrbitReport& r);

}  // namespace giz
