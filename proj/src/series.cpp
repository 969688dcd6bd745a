#include "giz/series.hpp"

#include <sstream>

#include "giz/error.hpp"

namespace giz {

TruncatedSeries2::TruncatedSeries2(int order) : order_(order) {
  if (order < 0 || order > 512) throw ValidationError("series order out of range");
  c_.assign(static_cast<std::size_t>(order + 1) * (order + 1), Rat(0));
}

const Rat& TruncatedSeries2::at(int i, int j) const {
  static const Rat zero(0);
  if (i < 0 || j < 0 || i + j > order_) return zero;
  return c_[static_cast<std::size_t>(i) * (order_ + 1) + j];
}

Rat& TruncatedSeries2::mut(int i, int j) {
  return c_[static_cast<std::size_t>(i) * (order_ + 1) + j];
}

void TruncatedSeries2::set(int i, int j, const Rat& v) {
  if (i < 0 || j < 0) throw ValidationError("negative series exponent");
  if (i + j > order_) return;  // beyond the jet
  mut(i, j) = v;
}

TruncatedSeries2 TruncatedSeries2::constant(int order, const Rat& c) {
  TruncatedSeries2 out(order);
  out.set(0, 0, c);
  return out;
}

TruncatedSeries2 TruncatedSeries2::monomial(int order, int i, int j, const Rat& c) {
  TruncatedSeries2 out(order);
  out.set(i, j, c);
  return out;
}

bool TruncatedSeries2::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool TruncatedSeries2::operator==(const TruncatedSeries2& o) const {
  return order_ == o.order_ && c_ == o.c_;
}

TruncatedSeries2 TruncatedSeries2::operator+(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw ValidationError("series order mismatch");
  TruncatedSeries2 out(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] + o.c_[k];
  return out;
}

TruncatedSeries2 TruncatedSeries2::operator-(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw ValidationError("series order mismatch");
  TruncatedSeries2 out(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] - o.c_[k];
  return out;
}

TruncatedSeries2 TruncatedSeries2::operator*(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw ValidationError("series order mismatch");
  TruncatedSeries2 out(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      if (at(i, j) == 0) continue;
      for (int a = 0; i + a <= order_; ++a)
        for (int b = 0; i + j + a + b <= order_; ++b) {
          if (o.at(a, b) == 0) continue;
          out.mut(i + a, j + b) += at(i, j) * o.at(a, b);
        }
    }
  return out;
}

TruncatedSeries2 TruncatedSeries2::unit_inverse() const {
  const Rat& c0 = at(0, 0);
  if (c0 == 0) throw ValidationError("inverse of a non-unit series");
  // Solve G * H = 1 degree by degree.
  TruncatedSeries2 h(order_);
  h.set(0, 0, Rat(1) / c0);
  for (int d = 1; d <= order_; ++d)
    for (int i = 0; i <= d; ++i) {
      int j = d - i;
      Rat acc(0);
      // sum over (a,b) < (i,j) with componentwise a<=i, b<=j, (a,b)!=(i,j)
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          if (a == i && b == j) continue;
          acc += at(i - a, j - b) * h.at(a, b);
        }
      h.mut(i, j) = -acc / c0;
    }
  return h;
}

TruncatedSeries2 TruncatedSeries2::subst_s_to_st() const {
  TruncatedSeries2 out(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      if (at(i, j) == 0) continue;
      if (2 * i + j <= order_) out.mut(i, i + j) += at(i, j);
    }
  return out;
}

TruncatedSeries2 TruncatedSeries2::subst_t_to_st() const {
  TruncatedSeries2 out(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      if (at(i, j) == 0) continue;
      if (i + 2 * j <= order_) out.mut(i + j, j) += at(i, j);
    }
  return out;
}

TruncatedSeries2 TruncatedSeries2::divide_monomial(int a, int b) const {
  TruncatedSeries2 out(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      if (at(i, j) == 0) continue;
      if (i < a || j < b)
        throw ValidationError("series term s^" + std::to_string(i) + " t^" + std::to_string(j) +
                              " is not divisible by s^" + std::to_string(a) + " t^" +
                              std::to_string(b));
      out.mut(i - a, j - b) = at(i, j);
    }
  return out;
}

std::pair<int, int> TruncatedSeries2::min_support() const {
  for (int d = 0; d <= order_; ++d)
    for (int i = 0; i <= d; ++i)
      if (at(i, d - i) != 0) return {i, d - i};
  return {-1, -1};
}

bool TruncatedSeries2::supported_above(int a, int b) const {
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j)
      if (at(i, j) != 0 && (i < a || j < b)) return false;
  return true;
}

std::string TruncatedSeries2::str(const std::string& s, const std::string& t) const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= order_; ++d)
    for (int i = d; i >= 0; --i) {
      int j = d - i;
      if (at(i, j) == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << rat_str(at(i, j));
      if (i) os << "*" << s << "^" << i;
      if (j) os << "*" << t << "^" << j;
    }
  if (first) os << "0";
  return os.str();
}

TruncatedSeries2 series_divide(const TruncatedSeries2& f, const TruncatedSeries2& g) {
  auto [a, b] = g.min_support();
  if (a < 0) throw ValidationError("division by the zero series");
  TruncatedSeries2 unit = g.divide_monomial(a, b);
  if (unit.at(0, 0) == 0)
    throw ValidationError("divisor is not monomial times unit");
  return f.divide_monomial(a, b) * unit.unit_inverse();
}

}  // namespace giz
