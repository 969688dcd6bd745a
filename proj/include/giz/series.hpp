#pragma once

#include <string>
#include <utility>
#include <vector>

#include "giz/rational.hpp"

namespace giz {

/*
 * Bivariate power series over Q, truncated at a fixed total degree N:
 * coefficients c_{ij} of s^i t^j are stored densely for i + j <= N and
 * everything above is discarded.  All operations re-truncate, so a value of
 * this type always represents a well-defined jet of order N.
 *
 * The lifting pipeline needs ring operations, the two substitutions
 * s -> s*t and t -> s*t (which only raise total degree, so jets stay
 * faithful), division by units, and exact division by monomials.
 */
class TruncatedSeries2 {
 public:
  explicit TruncatedSeries2(int order);

  int order() const { return order_; }
  const Rat& at(int i, int j) const;
  void set(int i, int j, const Rat& v);

  static TruncatedSeries2 constant(int order, const Rat& c);
  static TruncatedSeries2 monomial(int order, int i, int j, const Rat& c);

  bool is_zero() const;
  bool operator==(const TruncatedSeries2& o) const;

  TruncatedSeries2 operator+(const TruncatedSeries2& o) const;
  TruncatedSeries2 operator-(const TruncatedSeries2& o) const;
  TruncatedSeries2 operator*(const TruncatedSeries2& o) const;

  // Inverse of a unit (nonzero constant term).
  TruncatedSeries2 unit_inverse() const;

  // F(s*t, t): the s -> s*t substitution; and F(s, s*t).
  TruncatedSeries2 subst_s_to_st() const;
  TruncatedSeries2 subst_t_to_st() const;

  // Exact division by s^a t^b; throws ValidationError when some term is not
  // divisible.
  TruncatedSeries2 divide_monomial(int a, int b) const;

  // Smallest (i, j) with c_ij != 0 in lex order by total degree; (-1, -1)
  // for the zero jet.
  std::pair<int, int> min_support() const;

  // True when every nonzero term has i >= a and j >= b.
  bool supported_above(int a, int b) const;

  std::string str(const std::string& s = "s", const std::string& t = "t") const;

 private:
  int order_;
  std::vector<Rat> c_;  // row-major (order+1) x (order+1), entries i+j<=N used
  Rat& mut(int i, int j);
};

// General division F / G for G = s^a t^b * unit: factors the monomial part
// out of G, checks F is divisible by it, and multiplies by the unit inverse.
TruncatedSeries2 series_divide(const TruncatedSeries2& f, const TruncatedSeries2& g);

}  // namespace giz
