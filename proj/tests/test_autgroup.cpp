#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "giz/autgroup.hpp"
#include "giz/chain.hpp"
#include "giz/error.hpp"

using namespace giz;

namespace {
Feather feather_at(int comp, const Rat& mod, const Rat& ang, std::vector<int> tail = {}) {
  Feather f;
  f.component = comp;
  f.tail = std::move(tail);
  f.point = cstar(mod, ang);
  return f;
}

ExtendedDivisor running_example() {
  ExtendedDivisor d;
  d.chain = {0, 0, -2, -3, -2, -2, -3};
  d.feathers.push_back(feather_at(4, 1, 0));
  return d;
}

ExtendedDivisor loop_example() {
  ExtendedDivisor d;
  d.chain = {0, 0, -2, -3, -3, -2};
  d.feathers.push_back(feather_at(3, 1, 0));
  d.feathers.push_back(feather_at(4, 5, 0));
  return d;
}

ExtendedDivisor crowded_example() {
  ExtendedDivisor d;
  d.chain = {0, 0, -3, -2, -3, -2, -7, -2, -3, -2, -3};
  for (int c : {4, 5, 7, 8}) d.feathers.push_back(feather_at(c, 1, 0));
  return d;
}
}  // namespace

TEST_CASE("fibration graph shapes") {
  auto two = fibration_graph_shape(running_example());
  CHECK(two.shape == GraphShape::TwoVertices);
  CHECK(two.reason.find("distinguishes") != std::string::npos);
  CHECK(two.gamma.empty());

  auto loop = fibration_graph_shape(loop_example());
  CHECK(loop.shape == GraphShape::Loop);
  CHECK(loop.gamma.at(3) == cstar(5, 0));
  CHECK(loop.reason.find("self-reversed") != std::string::npos);

  auto unk = fibration_graph_shape(crowded_example());
  CHECK(unk.shape == GraphShape::Unknown);
  CHECK(unk.reason.find("outside") != std::string::npos);

  CHECK(graph_shape_str(GraphShape::Loop) == "Loop");
  CHECK(graph_shape_str(GraphShape::TwoVertices) == "TwoVertices");
  CHECK(graph_shape_str(GraphShape::Unknown) == "Unknown");
}

TEST_CASE("graph shape requires the star condition") {
  ExtendedDivisor d;
  d.chain = {0, -1, -2, -2, -4, -2, -2};
  d.feathers.push_back(feather_at(3, 1, 0));
  d.feathers.push_back(feather_at(5, 1, 0));
  CHECK_THROWS_AS(fibration_graph_shape(d), ValidationError);
}

TEST_CASE("when fibrations generate the automorphism group") {
  CHECK(aut_generated_by_fibrations(running_example()));
  CHECK_FALSE(aut_generated_by_fibrations(loop_example()));

  // The one loop-shaped boundary whose group the fibrations do generate.
  ExtendedDivisor special;
  special.chain = {0, 0, -2, -2, -2};
  CHECK(aut_generated_by_fibrations(special));

  CHECK_THROWS_AS(aut_generated_by_fibrations(crowded_example()), UndeterminedError);
}

TEST_CASE("amalgam presentations") {
  CHECK(amalgam_presentation(GraphShape::Loop) == "A ⋆_{A∩J} J");
  CHECK(amalgam_presentation(GraphShape::TwoVertices) == "J ⋆_A J^∨");
  CHECK_THROWS_AS(amalgam_presentation(GraphShape::Unknown), UndeterminedError);
}

TEST_CASE("birational letters and parsing") {
  CHECK(rev_letter("p").kind == BiratLetter::Kind::Rev);
  CHECK_THROWS_AS(rev_letter(""), ValidationError);
  CHECK_THROWS_AS(fib_letter(Rat(0), Rat(1), {}), ValidationError);
  CHECK_THROWS_AS(fib_letter(Rat(1), Rat(0), {}), ValidationError);

  auto w = parse_birat_word("Rev(p) Fib(2,3,y)");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == rev_letter("p"));
  CHECK(w[1] == fib_letter(Rat(2), Rat(3), Poly{Rat(0), Rat(1)}));
  CHECK(birat_word_str(w) == "Rev(p) Fib(2,3,y)");
  CHECK(birat_word_str({}) == "(empty)");
  CHECK(parse_birat_word("").empty());
  CHECK_THROWS_AS(parse_birat_word("Twist(p)"), ValidationError);
  CHECK_THROWS_AS(parse_birat_word("Fib(1)"), ValidationError);
}

TEST_CASE("word reduction") {
  SUBCASE("adjacent equal reversions cancel") {
    CHECK(reduce_birational_word({rev_letter("p"), rev_letter("p")}, false).empty());
  }
  SUBCASE("distinct reversions merge only over small weights") {
    auto merged = reduce_birational_word({rev_letter("p"), rev_letter("q")}, true);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].kind == BiratLetter::Kind::Rev);
    CHECK(merged[0].center == "#1");

    auto kept = reduce_birational_word({rev_letter("p"), rev_letter("q")}, false);
    CHECK(kept.size() == 2);
  }
  SUBCASE("triangular maps compose") {
    BiratWord w{fib_letter(Rat(2), Rat(3), Poly{Rat(0), Rat(1)}),
                fib_letter(Rat(5), Rat(7), Poly{Rat(0), Rat(0), Rat(1)})};
    auto red = reduce_birational_word(w, false);
    REQUIRE(red.size() == 1);
    CHECK(red[0] == fib_letter(Rat(10), Rat(21), Poly{Rat(0), Rat(5), Rat(9)}));
    CHECK(birat_word_str(red) == "Fib(10,21,5y + 9y^2)");
  }
  SUBCASE("identity letters vanish") {
    BiratWord w{fib_letter(Rat(1), Rat(1), {}), rev_letter("p")};
    auto red = reduce_birational_word(w, false);
    REQUIRE(red.size() == 1);
    CHECK(red[0] == rev_letter("p"));
  }
  SUBCASE("composition can cascade into cancellation") {
    // Fib * Fib^{-1} composes to the identity, which then disappears and
    // lets the flanking reversions cancel.
    BiratWord w{rev_letter("p"), fib_letter(Rat(2), Rat(3), {}),
                fib_letter(Rat(1) / 2, Rat(1) / 3, {}), rev_letter("p")};
    CHECK(reduce_birational_word(w, false).empty());
  }
}

TEST_CASE("toric reports") {
  SUBCASE("d=8 e=3 is self-inverse") {
    auto r = toric_report(8, 3);
    CHECK(r.e_reversed == 3);
    CHECK(r.shape == GraphShape::Loop);
    CHECK(r.boundary == WeightedChain{0, 0, -2, -3, -2});
    REQUIRE(r.feather.has_value());
    CHECK(r.feather->component == 4);
    CHECK(r.feather->tail == std::vector<int>{-3, -3});
    CHECK(toric_report_str(r) == "e' = 3; shape: Loop; Aut = A ⋆_{A∩J} J");
  }
  SUBCASE("d=7 e=2 reverses to e=4") {
    auto r = toric_report(7, 2);
    CHECK(r.e_reversed == 4);
    CHECK(r.shape == GraphShape::TwoVertices);
    CHECK(r.boundary == WeightedChain{0, 0, -2, -2, -3});
    REQUIRE(r.feather.has_value());
    CHECK(r.feather->tail == std::vector<int>{-2, -4});
    CHECK(toric_report_str(r) == "e' = 4; shape: TwoVertices; Aut = J ⋆_A J^∨");
  }
  SUBCASE("d=5 e=2") {
    auto r = toric_report(5, 2);
    CHECK(r.e_reversed == 3);
    CHECK(r.shape == GraphShape::TwoVertices);
    CHECK(r.boundary == WeightedChain{0, 0, -2, -3});
    REQUIRE(r.feather.has_value());
    CHECK(r.feather->tail == std::vector<int>{-2, -3});
  }
  SUBCASE("d=2 e=1") {
    auto r = toric_report(2, 1);
    CHECK(r.e_reversed == 1);
    CHECK(r.shape == GraphShape::Loop);
    CHECK(r.boundary == WeightedChain{0, 0, -2});
    REQUIRE(r.feather.has_value());
    CHECK(r.feather->component == 2);
    CHECK(r.feather->tail == std::vector<int>{-2});
  }
  SUBCASE("d=7 e=1 gives the long plain chain") {
    auto r = toric_report(7, 1);
    CHECK(r.e_reversed == 1);
    CHECK(r.shape == GraphShape::Loop);
    CHECK(r.boundary == WeightedChain{0, 0, -2, -2, -2, -2, -2, -2});
    REQUIRE(r.feather.has_value());
    CHECK(r.feather->tail == std::vector<int>{-7});
  }
  SUBCASE("d=1 degenerates to the quadric") {
    auto r = toric_report(1, 0);
    CHECK(r.e_reversed == 0);
    CHECK(r.shape == GraphShape::Loop);
    CHECK(r.boundary == WeightedChain{0, 0, 0});
    CHECK_FALSE(r.feather.has_value());
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(toric_report(4, 2), ValidationError);
    CHECK_THROWS_AS(toric_report(3, 3), ValidationError);
    CHECK_THROWS_AS(toric_report(3, 5), ValidationError);
    CHECK_THROWS_AS(toric_report(0, 0), ValidationError);
    CHECK_THROWS_AS(toric_report(-2, 1), ValidationError);
  }
  SUBCASE("reversal is an involution and loops match square roots of unity") {
    for (int d = 1; d <= 20; ++d)
      for (int e = (d == 1 ? 0 : 1); e < std::max(d, 1); ++e) {
        if (d > 1 && std::gcd(d, e) != 1) continue;
        auto r = toric_report(d, e);
        if (d > 1) CHECK(toric_report(d, r.e_reversed).e_reversed == e);
        CHECK((r.shape == GraphShape::Loop) == ((e * e) % std::max(d, 1) == 1 % std::max(d, 1)));
      }
  }
}
