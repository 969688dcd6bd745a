#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "giz/chain.hpp"
#include "giz/rational.hpp"
#include "giz/series.hpp"

namespace giz {

/*
 * Lifting triangular maps through chains of inner blowups.
 *
 * A triangular map is psi(x, y) = (a*x + P(y), b*y) with a, b nonzero and
 * P(0) = 0.  In the first chart (s, t) = (x, y/x) it takes the form
 *
 *     (s, t)  |->  ( alpha * s * U,  beta * t * U' )
 *
 * with alpha = a, beta = b/a and units U, U' congruent to 1 mod s^k t^l for
 * (k, l) = (0, 1).  Passing to the chart behind a further blowup composes
 * with sigma_R(s,t) = (s*t, t) for an R letter (new coordinates (s', t')
 * with old = (s't', t')) or sigma_L(s,t) = (s, s*t) for an L letter, and the
 * map keeps the same shape with the exponents folding as
 *
 *     L: k <- k + l        R: l <- k + l
 *
 * and the scalings as  L: beta <- beta/alpha,  R: alpha <- alpha/beta.
 *
 * k = 0 exactly when the word has no L, and l = 1 exactly along all-L words.
 * The residual factor R := (U - 1) / (s^k t^l) drives the induced action on
 * a feather attached at base point gamma of the corresponding component:
 * for l >= 2 it is u |-> (alpha/beta) * u, and for l = 1 it gains the
 * translation (alpha/beta) * gamma^(k+1) * R(0,0).  (For l = 1 the t^1-row
 * of U - 1 is concentrated in s^k, so R(., 0) is the constant R(0,0); this
 * is asserted at run time.)
 */

struct TriangularMap {
  Rat a{1}, b{1};
  Poly p;  // P(y) with P(0) = 0

  void check() const;  // a, b nonzero, P(0) = 0
};

enum class LiftLetter { L, R };
using LiftWord = std::vector<LiftLetter>;

LiftWord parse_lift_word(const std::string& s);  // characters 'L' / 'R'
std::string lift_word_str(const LiftWord& w);

// Fold of the exponent recurrence from (0, 1) over the word.
std::pair<long, long> lift_exponents(const LiftWord& w);

// Torus-scaling exponents (p, q): the coordinate along a component created
// by the given word scales by a^p b^q under (x, y) -> (a x, b y).  Tracked
// as the first row of the integer chart matrix M (det 1 throughout):
// M_1 = [[1,0],[-1,1]]; R: row1 -= row2; L: row2 -= row1.
struct ChartMatrix {
  long m[2][2];
};
ChartMatrix chart_matrix(const LiftWord& w);
std::pair<long, long> scaling_exponents(const LiftWord& w);

struct LiftForm {
  long k = 0, l = 1;
  Rat alpha{1}, beta{1};
  TruncatedSeries2 rs, rt;  // residual factors of the s- and t-side units
  int valid_order = 0;      // jet degrees trusted after monomial divisions
};

struct LiftResult {
  TruncatedSeries2 s, t;
  LiftForm form;
};

// Lift psi through the word at truncation order N.  If the unit-shape checks
// fail at order N the computation retries once at 2N before raising
// TheoryError.
LiftResult lift_series(const TriangularMap& psi, const LiftWord& w, int order);

struct FeatherAction {
  Rat scale;                          // alpha / beta
  std::optional<CStarPoint> shift;    // translation; nullopt = 0
};

FeatherAction feather_action(const LiftForm& form, const CStarPoint& gamma);

// The shear psi = (x + P(y), y) acts on a feather of the p-th staircase
// component attached at gamma by u |-> u + p * a * gamma, where a is the
// leading coefficient P'(0).  Closed form, cross-checked against the series
// route in the tests.
std::optional<CStarPoint> exceptional_translation(const Rat& a, const CStarPoint& gamma, int p);

/*
 * Exponent law: on a realizable tail, the components with l >= 2 are exactly
 * the non-exceptional inner ones.  Returns the first counterexample
 * (component index) or nullopt when the law holds.
 */
std::optional<int> exceptional_exponent_counterexample(const WeightedChain& tail);

// Per-inner-component torus scaling exponents (p, q) of a realizable tail,
// keyed by component index: the fold of the chart-matrix recurrence over
// each component's creation word.
std::vector<std::pair<int, std::pair<long, long>>> component_scaling_exponents(
    const WeightedChain& tail);

/*
 * Chart correspondence at the far end of a staircase.  With the coordinate
 * change (x', y') = (x^m y prod(x - a_i), 1/x) and the line (x, y) = (t, a),
 * rewriting in s = 1/t and renormalizing by the total vanishing order m + r
 * gives the exact limit value (1/a, 0) at s = 0.  Computed with exact
 * univariate rational functions; returns the limit pair.
 */
std::pair<Rat, Rat> correspondence_check(int m, const std::vector<Rat>& basepoints, const Rat& a);

}  // namespace giz
