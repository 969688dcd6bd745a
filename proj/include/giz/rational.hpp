#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "giz/error.hpp"

namespace giz {

/*
 * Exact scalar types.
 *
 * Rat          -- arbitrary-precision rational (GMP).
 * RatComplex   -- element of Q(i), used for points of the affine line when a
 *                 component carries an A^1-type configuration.
 * CStarPoint   -- point of C^* in exact polar form: a positive rational
 *                 modulus together with a rational angle theta in [0,1),
 *                 measured in full turns, i.e. the complex number
 *                 r * exp(2*pi*i*theta).  Multiplication, inversion and
 *                 integer powers stay inside this set, which is exactly what
 *                 the scaling actions on feather base points need; roots of
 *                 unity are the points (1, k/d).
 */

using Rat = mpq_class;

// Parse "p", "-p", or "p/q" into a canonical rational.  Throws
// ValidationError on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical text form, "p" or "p/q" with gcd(p,q)=1, q>0.  parse_rat is a
// left inverse, and the form is stable under re-parsing (byte-deterministic).
std::string rat_str(const Rat& x);

// x^n for possibly negative n; throws ValidationError on 0^negative.
Rat rat_pow(const Rat& x, long n);

struct RatComplex {
  Rat re, im;

  bool operator==(const RatComplex&) const = default;
};

RatComplex operator+(const RatComplex& a, const RatComplex& b);
RatComplex operator-(const RatComplex& a, const RatComplex& b);
RatComplex operator*(const RatComplex& a, const RatComplex& b);
RatComplex operator/(const RatComplex& a, const RatComplex& b);
bool rc_less(const RatComplex& a, const RatComplex& b);
std::string rc_str(const RatComplex& z);

struct CStarPoint {
  Rat modulus;  // > 0
  Rat angle;    // in [0,1), fraction of a full turn

  bool operator==(const CStarPoint&) const = default;
};

// Reduce an angle to the half-open fundamental interval [0,1).
Rat normalize_angle(const Rat& a);

// Construct with validation: modulus > 0, angle normalized into [0,1).
CStarPoint cstar(const Rat& modulus, const Rat& angle);

// Embed a nonzero rational: negative reals live at angle 1/2.
CStarPoint cstar_of_rat(const Rat& x);

CStarPoint operator*(const CStarPoint& a, const CStarPoint& b);
CStarPoint operator/(const CStarPoint& a, const CStarPoint& b);
CStarPoint cstar_pow(const CStarPoint& a, long n);
bool cstar_less(const CStarPoint& a, const CStarPoint& b);
std::string cstar_str(const CStarPoint& p);

// Sorted-unique point sets; all set comparisons in the configuration
// invariants go through this canonical form.
using PointSet = std::vector<CStarPoint>;
PointSet make_point_set(std::vector<CStarPoint> pts);
PointSet scale_set(const CStarPoint& alpha, const PointSet& a);

/*
 * Dense univariate polynomials over Q, coefficient of y^i at index i.
 * Normalized: no trailing zero coefficients (the zero polynomial is {}).
 * Used for the shear parts P(y) of triangular maps and for exact rational
 * function arithmetic in the chart-correspondence check.
 */
using Poly = std::vector<Rat>;

Poly poly_normalize(Poly p);
bool poly_is_zero(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);
// P(c*y): coefficient i multiplied by c^i.
Poly poly_compose_scale(const Poly& p, const Rat& c);
std::string poly_str(const Poly& p);  // human form in the variable "y"

// Parse expressions like "y", "3y^2", "-1/2y^3+y", "0".  Accepts an optional
// rational coefficient, the variable y, and an optional caret power per term.
Poly parse_poly(const std::string& text);

}  // namespace giz
