#include "giz/serieslift.hpp"

#include <algorithm>

#include "giz/blowup.hpp"
#include "giz/error.hpp"

namespace giz {

void TriangularMap::check() const {
  if (a == 0 || b == 0) throw ValidationError("triangular map needs nonzero a, b");
  if (!p.empty() && p[0] != 0) throw ValidationError("triangular map needs P(0) = 0");
}

LiftWord parse_lift_word(const std::string& s) {
  LiftWord out;
  for (char c : s) {
    if (c == 'L' || c == 'l')
      out.push_back(LiftLetter::L);
    else if (c == 'R' || c == 'r')
      out.push_back(LiftLetter::R);
    else
      throw ValidationError(std::string("lift words are over {L, R}, got '") + c + "'");
  }
  return out;
}

std::string lift_word_str(const LiftWord& w) {
  std::string out;
  for (auto l : w) out.push_back(l == LiftLetter::L ? 'L' : 'R');
  return out;
}

std::pair<long, long> lift_exponents(const LiftWord& w) {
  long k = 0, l = 1;
  for (auto let : w) {
    if (let == LiftLetter::L)
      k += l;
    else
      l += k;
  }
  return {k, l};
}

ChartMatrix chart_matrix(const LiftWord& w) {
  ChartMatrix m{{{1, 0}, {-1, 1}}};
  for (auto let : w) {
    if (let == LiftLetter::R) {
      m.m[0][0] -= m.m[1][0];
      m.m[0][1] -= m.m[1][1];
    } else {
      m.m[1][0] -= m.m[0][0];
      m.m[1][1] -= m.m[0][1];
    }
  }
  return m;
}

std::pair<long, long> scaling_exponents(const LiftWord& w) {
  ChartMatrix m = chart_matrix(w);
  if (m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0] != 1)
    throw TheoryError("chart matrix lost its determinant");
  return {m.m[0][0], m.m[0][1]};
}

namespace {

struct Pipeline {
  TruncatedSeries2 s, t;
  Rat alpha, beta;
  int valid;
};

Pipeline base_lift(const TriangularMap& psi, int order) {
  // (s, t) = (x, y/x): the map sends s to a*s + P(st) = a*s*(1 + t*Q(st)/a)
  // with Q(y) = P(y)/y, and t to b*s*t / S.
  TruncatedSeries2 us = TruncatedSeries2::constant(order, Rat(1));
  for (std::size_t m = 1; m < psi.p.size(); ++m) {
    // term q_{m-1} (st)^{m-1} * t / a of t*Q(st)/a
    int e = static_cast<int>(m) - 1;
    if (e + (e + 1) <= order && psi.p[m] != 0) {
      TruncatedSeries2 term = TruncatedSeries2::monomial(order, e, e + 1, psi.p[m] / psi.a);
      us = us + term;
    }
  }
  Pipeline out{TruncatedSeries2::monomial(order, 1, 0, psi.a) * us,
               TruncatedSeries2::monomial(order, 0, 1, psi.b / psi.a) * series_divide(
                   TruncatedSeries2::constant(order, Rat(1)), us),
               psi.a, psi.b / psi.a, order};
  return out;
}

void step(Pipeline& p, LiftLetter let) {
  if (let == LiftLetter::R) {
    TruncatedSeries2 s2 = p.s.subst_s_to_st(), t2 = p.t.subst_s_to_st();
    p.s = series_divide(s2, t2);
    p.t = t2;
    p.alpha = p.alpha / p.beta;
  } else {
    TruncatedSeries2 s2 = p.s.subst_t_to_st(), t2 = p.t.subst_t_to_st();
    p.t = series_divide(t2, s2);
    p.s = s2;
    p.beta = p.beta / p.alpha;
  }
  p.valid -= 1;
}

// Extract the residual factor R from alpha * s * (1 + s^k t^l R); nullopt
// when the jet does not have that shape.
std::optional<TruncatedSeries2> residual(const TruncatedSeries2& f, const Rat& scale, bool s_side,
                                         long k, long l) {
  TruncatedSeries2 u = f.divide_monomial(s_side ? 1 : 0, s_side ? 0 : 1);
  TruncatedSeries2 dev = u - TruncatedSeries2::constant(u.order(), scale);
  if (!dev.supported_above(static_cast<int>(k), static_cast<int>(l))) return std::nullopt;
  TruncatedSeries2 r = dev.divide_monomial(static_cast<int>(k), static_cast<int>(l));
  // Normalize to U = 1 + s^k t^l R with the scale divided out.
  return r * TruncatedSeries2::constant(r.order(), Rat(1) / scale);
}

}  // namespace

LiftResult lift_series(const TriangularMap& psi, const LiftWord& w, int order) {
  psi.check();
  if (order < 2) throw ValidationError("lift order must be at least 2");
  auto [k, l] = lift_exponents(w);

  for (int attempt = 0; attempt < 2; ++attempt) {
    int n = attempt == 0 ? order : 2 * order;
    Pipeline p = base_lift(psi, n);
    for (auto let : w) step(p, let);

    auto rs = residual(p.s, p.alpha, true, k, l);
    auto rt = residual(p.t, p.beta, false, k, l);
    if (!rs || !rt) continue;
    if (l == 1) {
      // The t^1-row of U - 1 sits entirely in s^k: R(., 0) is constant.
      for (int i = 1; i <= rs->order(); ++i)
        if (rs->at(i, 0) != 0)
          throw TheoryError("l = 1 residual has a non-constant t^0-row");
    }
    LiftResult out{p.s, p.t, LiftForm{k, l, p.alpha, p.beta, *rs, *rt, p.valid}};
    return out;
  }
  throw TheoryError("lift did not factor as scaling * unit for word " + lift_word_str(w));
}

FeatherAction feather_action(const LiftForm& form, const CStarPoint& gamma) {
  FeatherAction out{form.alpha / form.beta, std::nullopt};
  if (form.l >= 2) return out;
  Rat r00 = form.rs.at(0, 0);
  if (r00 != 0) {
    CStarPoint c = cstar_of_rat(out.scale * r00) * cstar_pow(gamma, form.k + 1);
    out.shift = c;
  }
  return out;
}

std::optional<CStarPoint> exceptional_translation(const Rat& a, const CStarPoint& gamma, int p) {
  if (p < 1) throw ValidationError("staircase index must be positive");
  Rat c = Rat(p) * a;
  if (c == 0) return std::nullopt;
  return cstar_of_rat(c) * gamma;
}

std::optional<int> exceptional_exponent_counterexample(const WeightedChain& tail) {
  auto exc = exceptional_components(tail);
  for (auto& [component, kl] : tail_component_kl(tail)) {
    bool expect_exceptional = kl.second < 2;
    if (exc.count(component) != static_cast<std::size_t>(expect_exceptional ? 1 : 0))
      return component;
  }
  return std::nullopt;
}

std::vector<std::pair<int, std::pair<long, long>>> component_scaling_exponents(
    const WeightedChain& tail) {
  std::vector<std::pair<int, std::pair<long, long>>> out;
  BlowupTree t = tree_of_chain(tail);
  for (const TreeNode& node : t.nodes) {
    LiftWord w;
    for (char c : node.path) w.push_back(c == 'L' ? LiftLetter::L : LiftLetter::R);
    w.push_back(LiftLetter::R);
    out.emplace_back(node.chain_position + 3, scaling_exponents(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Rat, Rat> correspondence_check(int m, const std::vector<Rat>& basepoints, const Rat& a) {
  if (m < 0) throw ValidationError("vanishing order m must be >= 0");
  if (a == 0) throw ValidationError("the line parameter a must be nonzero");
  const int r = static_cast<int>(basepoints.size());

  // On the line (x, y) = (t, a):  x' = t^m * a * prod(t - a_i),  y' = 1/t.
  Poly xprime{a};
  for (const Rat& ai : basepoints) xprime = poly_mul(xprime, Poly{-ai, Rat(1)});
  Poly tm(m + 1, Rat(0));
  tm[m] = 1;
  xprime = poly_mul(xprime, tm);

  // Substitute t = 1/s: a degree-D polynomial becomes rev(X)(s) / s^D, so
  // w0 := 1/x' = s^D / rev(X)(s) with D = m + r, and z0 := y' = s.
  const int deg = static_cast<int>(xprime.size()) - 1;
  if (deg != m + r) throw TheoryError("vanishing order bookkeeping is off");
  Poly rev(xprime.rbegin(), xprime.rend());
  Poly w0_num(deg + 1, Rat(0));
  w0_num[deg] = 1;
  Poly w0_den = rev;

  // Renormalize by the vanishing order: w = w0 / z0^(m+r).  Cancel the
  // common s-power exactly.
  Poly w_num = w0_num;
  Poly w_den = w0_den;
  for (int i = 0; i < m + r; ++i) w_den.insert(w_den.begin(), Rat(0));  // * s^(m+r)
  while (!w_num.empty() && !w_den.empty() && w_num[0] == 0 && w_den[0] == 0) {
    w_num.erase(w_num.begin());
    w_den.erase(w_den.begin());
  }
  if (w_num.empty() || w_den.empty() || poly_eval(w_den, Rat(0)) == 0)
    throw TheoryError("renormalized chart value is not regular at s = 0");
  Rat w_at_0 = poly_eval(w_num, Rat(0)) / poly_eval(w_den, Rat(0));
  Rat z_at_0 = poly_eval(Poly{Rat(0), Rat(1)}, Rat(0));  // z = z0 = s
  return {w_at_0, z_at_0};
}

}  // namespace giz
