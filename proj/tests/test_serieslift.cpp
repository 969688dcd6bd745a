#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "giz/blowup.hpp"
#include "giz/error.hpp"
#include "giz/serieslift.hpp"

using namespace giz;

using S = TruncatedSeries2;

namespace {
bool eq_upto(const S& f, const S& g, int n) {
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (f.at(i, j) != g.at(i, j)) return false;
  return true;
}

// Independent fold of the exponent recurrence.
std::pair<long, long> kl_fold(const LiftWord& w) {
  long k = 0, l = 1;
  for (auto let : w)
    (let == LiftLetter::L ? k : l) += (let == LiftLetter::L ? l : k);
  return {k, l};
}
}  // namespace

TEST_CASE("lift word parsing") {
  CHECK(parse_lift_word("LRlr") == LiftWord{LiftLetter::L, LiftLetter::R, LiftLetter::L,
                                            LiftLetter::R});
  CHECK(lift_word_str(parse_lift_word("RLL")) == "RLL");
  CHECK(parse_lift_word("").empty());
  CHECK_THROWS_AS(parse_lift_word("LXR"), ValidationError);
}

TEST_CASE("exponent recurrence") {
  CHECK(lift_exponents({}) == std::pair<long, long>{0, 1});
  CHECK(lift_exponents(parse_lift_word("LR")) == std::pair<long, long>{1, 2});
  CHECK(lift_exponents(parse_lift_word("RRRR")) == std::pair<long, long>{0, 1});
  CHECK(lift_exponents(parse_lift_word("LLR")) == std::pair<long, long>{2, 3});
}

TEST_CASE("chart matrices and scaling exponents") {
  CHECK(scaling_exponents({}) == std::pair<long, long>{1, 0});
  CHECK(scaling_exponents(parse_lift_word("R")) == std::pair<long, long>{2, -1});
  CHECK(scaling_exponents(parse_lift_word("RLR")) == std::pair<long, long>{5, -3});
  // Unimodularity holds along random words (checked internally too).
  std::mt19937 rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    LiftWord w;
    for (int i = 0; i < static_cast<int>(rng() % 9); ++i)
      w.push_back((rng() % 2) ? LiftLetter::L : LiftLetter::R);
    ChartMatrix m = chart_matrix(w);
    CHECK(m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0] == 1);
  }
}

TEST_CASE("triangular map validation") {
  CHECK_THROWS_AS(TriangularMap(Rat(0), Rat(1), Poly{}).check(), ValidationError);
  CHECK_THROWS_AS(TriangularMap(Rat(1), Rat(0), Poly{}).check(), ValidationError);
  CHECK_THROWS_AS(TriangularMap(Rat(1), Rat(1), Poly{Rat(2)}).check(), ValidationError);
  CHECK_NOTHROW(TriangularMap(Rat(2), Rat(3), Poly{Rat(0), Rat(1)}).check());
  CHECK_THROWS_AS(lift_series(TriangularMap{Rat(1), Rat(1), {}}, {}, 1), ValidationError);
}

TEST_CASE("base lift golden: shear by y") {
  // psi = (x + y, y) in the (s, t) = (x, y/x) chart becomes
  // (s (1 + t), t / (1 + t)).
  int n = 10;
  TriangularMap psi{Rat(1), Rat(1), Poly{Rat(0), Rat(1)}};
  auto res = lift_series(psi, {}, n);

  S one_plus_t = S::constant(n, 1) + S::monomial(n, 0, 1, 1);
  S want_s = S::monomial(n, 1, 0, 1) * one_plus_t;
  S want_t = S::monomial(n, 0, 1, 1) * one_plus_t.unit_inverse();
  CHECK(eq_upto(res.s, want_s, res.form.valid_order));
  CHECK(eq_upto(res.t, want_t, res.form.valid_order));
  CHECK(res.form.k == 0);
  CHECK(res.form.l == 1);
  CHECK(res.form.alpha == 1);
  CHECK(res.form.beta == 1);
}

TEST_CASE("lifts factor through scaling times unit") {
  std::mt19937 rng(2024);
  std::vector<Rat> coefs{Rat(1), Rat(-1), Rat(2), Rat(1) / 2, Rat(-3), Rat(5) / 3};
  for (int iter = 0; iter < 40; ++iter) {
    TriangularMap psi;
    psi.a = coefs[rng() % coefs.size()];
    psi.b = coefs[rng() % coefs.size()];
    psi.p = Poly{Rat(0)};
    for (int de = 1; de <= 1 + static_cast<int>(rng() % 3); ++de)
      psi.p.push_back(coefs[rng() % coefs.size()]);
    LiftWord w;
    for (int i = 0; i < static_cast<int>(rng() % 7); ++i)
      w.push_back((rng() % 2) ? LiftLetter::L : LiftLetter::R);

    auto res = lift_series(psi, w, 12);
    auto [k, l] = kl_fold(w);
    CHECK(res.form.k == k);
    CHECK(res.form.l == l);
    bool has_l = false;
    for (auto let : w) has_l |= (let == LiftLetter::L);
    CHECK((k == 0) == !has_l);

    // Independent fold of the scaling pair.
    Rat alpha = psi.a, beta = psi.b / psi.a;
    for (auto let : w)
      (let == LiftLetter::R ? alpha : beta) /= (let == LiftLetter::R ? beta : alpha);
    CHECK(res.form.alpha == alpha);
    CHECK(res.form.beta == beta);

    // Claim-1 shape: each coordinate is scaling * monomial * (1 + s^k t^l R).
    int v = res.form.valid_order;
    REQUIRE(v >= 1);
    S us = res.s.divide_monomial(1, 0), ut = res.t.divide_monomial(0, 1);
    CHECK(us.at(0, 0) == alpha);
    CHECK(ut.at(0, 0) == beta);
    S dev_s = us - S::constant(us.order(), alpha);
    S dev_t = ut - S::constant(ut.order(), beta);
    for (int i = 0; i <= v - 1; ++i)
      for (int j = 0; i + j <= v - 1; ++j) {
        bool above = i >= k && j >= l;
        if (!above) {
          CHECK(dev_s.at(i, j) == 0);
          CHECK(dev_t.at(i, j) == 0);
        }
      }
  }
}

TEST_CASE("feather action") {
  SUBCASE("higher second exponent fixes the base atom") {
    TriangularMap psi{Rat(1), Rat(1), Poly{Rat(0), Rat(1)}};
    auto res = lift_series(psi, parse_lift_word("LR"), 12);
    REQUIRE(res.form.l == 2);
    auto fa = feather_action(res.form, cstar(2, Rat(1) / 3));
    CHECK(fa.scale == res.form.alpha / res.form.beta);
    CHECK_FALSE(fa.shift.has_value());
  }
  SUBCASE("staircase translation grows linearly with the depth") {
    // Along the pure staircase the translation constant of the lift of
    // (x + c y, y) at depth p + 1 is (p + 1) c gamma.
    CStarPoint gamma = cstar(2, Rat(1) / 3);
    for (int p = 0; p <= 3; ++p) {
      for (Rat c : std::vector<Rat>{Rat(1), Rat(-3), Rat(1) / 2}) {
        TriangularMap psi{Rat(1), Rat(1), Poly{Rat(0), c}};
        auto res = lift_series(psi, LiftWord(p, LiftLetter::R), 12);
        REQUIRE(res.form.l == 1);
        auto fa = feather_action(res.form, gamma);
        auto et = exceptional_translation(c, gamma, p + 1);
        REQUIRE(fa.shift.has_value());
        REQUIRE(et.has_value());
        CHECK(*fa.shift == *et);
      }
    }
  }
  SUBCASE("no translation without a shear") {
    TriangularMap psi{Rat(2), Rat(3), Poly{}};
    auto res = lift_series(psi, LiftWord(2, LiftLetter::R), 10);
    auto fa = feather_action(res.form, cstar(1, 0));
    CHECK_FALSE(fa.shift.has_value());
  }
}

TEST_CASE("exceptional translation formula") {
  CHECK(*exceptional_translation(Rat(2), cstar(2, Rat(1) / 3), 3) == cstar(12, Rat(1) / 3));
  CHECK(*exceptional_translation(Rat(-1), cstar(1, 0), 2) == cstar(2, Rat(1) / 2));
  CHECK_FALSE(exceptional_translation(Rat(0), cstar(1, 0), 1).has_value());
  CHECK_THROWS_AS(exceptional_translation(Rat(1), cstar(1, 0), 0), ValidationError);
}

TEST_CASE("exceptional components match the exponent criterion") {
  CHECK_FALSE(exceptional_exponent_counterexample({-3, -1, -3, -1, -3}).has_value());
  CHECK_FALSE(exceptional_exponent_counterexample({-2, -3, -1, -2, -3}).has_value());
  CHECK_FALSE(exceptional_exponent_counterexample({-3, -2, -1, -3, -2}).has_value());
  std::mt19937 rng(8);
  for (int iter = 0; iter < 60; ++iter) {
    BlowupWord w{{Letter::OuterStart, -1}};
    for (int i = 0; i < static_cast<int>(rng() % 7); ++i)
      w.push_back({(rng() % 2) ? Letter::L : Letter::R, -1});
    CHECK_FALSE(exceptional_exponent_counterexample(generate_chain(w)).has_value());
  }
}

TEST_CASE("per-component scaling exponents") {
  auto got = component_scaling_exponents({-2, -3, -1, -2, -3});
  REQUIRE(got.size() == 3);
  CHECK(got[0] == std::pair<int, std::pair<long, long>>{3, {2, -1}});
  CHECK(got[1] == std::pair<int, std::pair<long, long>>{4, {5, -3}});
  CHECK(got[2] == std::pair<int, std::pair<long, long>>{5, {3, -2}});
}

TEST_CASE("correspondence between line images and fiber coordinates") {
  std::vector<std::vector<Rat>> pointsets{
      {}, {Rat(1)}, {Rat(1), Rat(2)}, {Rat(-1), Rat(1) / 2, Rat(3)}};
  for (int m = 0; m <= 4; ++m)
    for (const auto& bp : pointsets)
      for (Rat a : std::vector<Rat>{Rat(1), Rat(-1), Rat(2), Rat(-3), Rat(1) / 2}) {
        auto got = correspondence_check(m, bp, a);
        CHECK(got.first == 1 / a);
        CHECK(got.second == 0);
      }
  CHECK_THROWS_AS(correspondence_check(-1, {}, Rat(1)), ValidationError);
  CHECK_THROWS_AS(correspondence_check(0, {}, Rat(0)), ValidationError);
}
