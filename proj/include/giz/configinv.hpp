#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "giz/extdiv.hpp"
#include "giz/rational.hpp"

namespace giz {

/*
 * Configuration invariants of finite subsets of C^*.
 *
 * For a finite A in C^*, the stabilizer G(A) = { alpha : alpha * A = A } is a
 * finite cyclic group of roots of unity (a scaling that permutes a finite set
 * preserves the largest modulus, hence is unitary, hence of finite order).
 * With d(A) = |G(A)|, A splits into m(A) = |A| / d(A) free G(A)-orbits, and
 * the triple (d, m, orbits) is what feather configurations contribute to the
 * surface's invariants.  Conventions for the empty set: d = 0, G = C^*,
 * m = 0.
 */

struct SymmetryData {
  long d = 0;
  long m = 0;
  std::vector<CStarPoint> group;             // sorted; empty for A = {}
  std::vector<std::vector<CStarPoint>> orbits;  // each sorted; sorted by min
};

SymmetryData symmetry_group(const PointSet& a);

// Smallest alpha with alpha * A = B, by (modulus, angle); nullopt when the
// sets are not scale-equivalent.  Empty = empty has witness 1.
std::optional<CStarPoint> star_class_equal(const PointSet& a, const PointSet& b);

// Affine equivalence of finite subsets of the affine line: the smallest
// (a, b), a != 0, with B = a*A + b, or nullopt.  Singletons and empty sets
// are always equivalent (a = 1).
std::optional<std::pair<RatComplex, RatComplex>> plus_class_equal(
    const std::vector<RatComplex>& a, const std::vector<RatComplex>& b);

/*
 * Self-reversedness of a divisor's invariant.
 *
 * The reversed surface carries the mirrored data, so the invariant is
 * preserved exactly when the tail is a palindrome, the feather counts
 * satisfy r_i = r_{i^} for the reflection i^ = n + 2 - i, and for each inner
 * pair a single scaling gamma_i identifies every depth layer:
 * A_{i^,s} = gamma_i * A_{i,s} for all tail lengths s at once.  For smooth
 * surfaces only s = 0 occurs.
 */
struct SelfReversed {
  bool equal = false;
  // Witness per inner pair, keyed by min(i, i^); identity for the middle.
  std::map<int, CStarPoint> gamma;
  std::string reason;  // first failed check when !equal
};

SelfReversed q_self_reversed(const ExtendedDivisor& d);

}  // namespace giz
