#include "giz/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace giz {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  // mpq_class accepts forms like "p/q" but also silently tolerates leading
  // whitespace and partial garbage through set_str; validate strictly.
  auto valid = [](const std::string& s) {
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    return digits > 0 && i == s.size();
  };
  if (!valid(text)) throw ValidationError("malformed rational literal: \"" + text + "\"");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ValidationError("malformed rational literal: \"" + text + "\"");
  if (q.get_den() == 0) throw ValidationError("zero denominator in rational literal: \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& x) {
  return x.get_str();
}

Rat rat_pow(const Rat& x, long n) {
  if (n == 0) return Rat(1);
  if (x == 0 && n < 0) throw ValidationError("zero to a negative power");
  Rat base = n > 0 ? x : Rat(1) / x;
  unsigned long e = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  Rat out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

RatComplex operator+(const RatComplex& a, const RatComplex& b) { return {a.re + b.re, a.im + b.im}; }
RatComplex operator-(const RatComplex& a, const RatComplex& b) { return {a.re - b.re, a.im - b.im}; }

RatComplex operator*(const RatComplex& a, const RatComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RatComplex operator/(const RatComplex& a, const RatComplex& b) {
  Rat n = b.re * b.re + b.im * b.im;
  if (n == 0) throw ValidationError("division by zero in Q(i)");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

bool rc_less(const RatComplex& a, const RatComplex& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

std::string rc_str(const RatComplex& z) {
  return "(" + rat_str(z.re) + ", " + rat_str(z.im) + ")";
}

Rat normalize_angle(const Rat& a) {
  // a - floor(a): mpz fdiv gives floor division directly.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  Rat out = a - Rat(fl);
  out.canonicalize();
  return out;
}

CStarPoint cstar(const Rat& modulus, const Rat& angle) {
  if (modulus <= 0) throw ValidationError("modulus must be positive, got " + rat_str(modulus));
  return CStarPoint{modulus, normalize_angle(angle)};
}

CStarPoint cstar_of_rat(const Rat& x) {
  if (x == 0) throw ValidationError("zero is not a point of C^*");
  return x > 0 ? CStarPoint{x, Rat(0)} : CStarPoint{-x, Rat(1, 2)};
}

CStarPoint operator*(const CStarPoint& a, const CStarPoint& b) {
  return CStarPoint{a.modulus * b.modulus, normalize_angle(a.angle + b.angle)};
}

CStarPoint operator/(const CStarPoint& a, const CStarPoint& b) {
  return CStarPoint{a.modulus / b.modulus, normalize_angle(a.angle - b.angle)};
}

CStarPoint cstar_pow(const CStarPoint& a, long n) {
  return CStarPoint{rat_pow(a.modulus, n), normalize_angle(a.angle * Rat(n))};
}

bool cstar_less(const CStarPoint& a, const CStarPoint& b) {
  if (a.modulus != b.modulus) return a.modulus < b.modulus;
  return a.angle < b.angle;
}

std::string cstar_str(const CStarPoint& p) {
  return rat_str(p.modulus) + "@" + rat_str(p.angle);
}

PointSet make_point_set(std::vector<CStarPoint> pts) {
  std::sort(pts.begin(), pts.end(), cstar_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

PointSet scale_set(const CStarPoint& alpha, const PointSet& a) {
  std::vector<CStarPoint> out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(alpha * p);
  return make_point_set(std::move(out));
}

Poly poly_normalize(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool poly_is_zero(const Poly& p) { return poly_normalize(p).empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_normalize(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_normalize(std::move(out));
}

Poly poly_scale(const Rat& c, const Poly& p) {
  Poly out = p;
  for (auto& x : out) x *= c;
  return poly_normalize(std::move(out));
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat out(0);
  for (std::size_t i = p.size(); i-- > 0;) out = out * x + p[i];
  return out;
}

Poly poly_compose_scale(const Poly& p, const Rat& c) {
  Poly out = p;
  Rat f(1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= f;
    f *= c;
  }
  return poly_normalize(std::move(out));
}

std::string poly_str(const Poly& p) {
  if (poly_is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rat c = p[i];
    if (first) {
      if (c < 0) os << "-", c = -c;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << rat_str(c);
    } else {
      if (c != 1) os << rat_str(c);
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly parse_poly(const std::string& text) {
  // Term grammar: [sign] [rational] [ 'y' [ '^' uint ] ], terms joined by +/-.
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty polynomial");
  Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) num.push_back(s[i++]);
    Rat coef = num.empty() ? Rat(1) : parse_rat(num);
    std::size_t deg = 0;
    if (i < s.size() && s[i] == 'y') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty()) throw ValidationError("missing exponent in polynomial: \"" + text + "\"");
        deg = std::stoul(e);
      }
    } else if (num.empty()) {
      throw ValidationError("malformed polynomial term in: \"" + text + "\"");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw ValidationError("malformed polynomial: \"" + text + "\"");
    if (out.size() <= deg) out.resize(deg + 1, Rat(0));
    out[deg] += Rat(sign) * coef;
  }
  return poly_normalize(std::move(out));
}

}  // namespace giz
