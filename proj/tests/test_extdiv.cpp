#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "giz/extdiv.hpp"
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

// Standard running example: chain [0,0,-2,-3,-2,-2,-3] with one feather on
// the fourth component at the unit point.
ExtendedDivisor running_example() {
  ExtendedDivisor d;
  d.chain = {0, 0, -2, -3, -2, -2, -3};
  d.feathers.push_back(feather_at(4, 1, 0));
  return d;
}

// 1-standard divisor [0,-1,-2,-2,-4,-2,-2] with plain feathers on the third
// and fifth components.
ExtendedDivisor mixed_types_example() {
  ExtendedDivisor d;
  d.chain = {0, -1, -2, -2, -4, -2, -2};
  d.feathers.push_back(feather_at(3, 1, 0));
  d.feathers.push_back(feather_at(5, 1, 0));
  return d;
}
}  // namespace

TEST_CASE("divisor accessors") {
  ExtendedDivisor d = running_example();
  CHECK(d.n() == 6);
  CHECK(d.r(4) == 1);
  CHECK(d.r(3) == 0);
  CHECK(d.v(4) == -1);
  CHECK(d.pre_feather_tail() == WeightedChain{-2, -3, -1, -2, -3});
  CHECK(d.feathers_on(4).size() == 1);
  CHECK(d.feathers_on(5).empty());
  CHECK(d.base_points(4) == PointSet{cstar(1, 0)});
  CHECK(d.base_points(4, 0) == PointSet{cstar(1, 0)});
  CHECK(d.base_points(4, 1) == PointSet{});
  CHECK(d.max_tail_len(4) == 0);
  CHECK(d.feathers[0].mother_index() == 4);

  ExtendedDivisor e = d;
  e.feathers[0].mother = 3;
  CHECK(e.feathers[0].mother_index() == 3);
}

TEST_CASE("validation accepts the examples") {
  CHECK_NOTHROW(validate(running_example()));
  CHECK_NOTHROW(validate(mixed_types_example()));
}

TEST_CASE("validation rejects malformed feathers") {
  auto bad = [](auto mutate) {
    ExtendedDivisor d = running_example();
    mutate(d);
    return d;
  };
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) { d.feathers[0].component = 1; })),
                  ValidationError);
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) { d.feathers[0].component = 7; })),
                  ValidationError);
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) { d.feathers[0].bridge = 0; })),
                  ValidationError);
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) { d.feathers[0].tail = {-1}; })),
                  ValidationError);
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) { d.chain = {0}; })), ValidationError);
  // Two feathers of equal tail length on one component must use distinct
  // base points.
  CHECK_THROWS_AS(validate(bad([](ExtendedDivisor& d) {
                    d.feathers.push_back(feather_at(4, 1, 0));
                  })),
                  ValidationError);
}

TEST_CASE("base point construction rejects bad coordinates") {
  CHECK_THROWS_AS(cstar(0, 0), ValidationError);
  CHECK_THROWS_AS(cstar(-1, 0), ValidationError);
  // The constructor wraps angles into [0,1); validate() rejects raw points
  // that bypassed it.
  CHECK(cstar(1, Rat(3) / 2).angle == Rat(1) / 2);
  CHECK(cstar(1, -1).angle == 0);
  CHECK_NOTHROW(cstar(Rat(1) / 2, Rat(11) / 12));
  ExtendedDivisor d = running_example();
  d.feathers[0].point.angle = Rat(3) / 2;
  CHECK_THROWS_AS(validate(d), ValidationError);
}

TEST_CASE("contractibility of weighted trees") {
  auto linear = [](std::vector<int> ws) {
    WeightedTree t;
    for (int w : ws) t.add(w);
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) t.link(static_cast<int>(i),
                                                          static_cast<int>(i) + 1);
    return t;
  };
  CHECK(is_contractible(linear({-1})));
  CHECK(is_contractible(linear({-1, -2})));
  CHECK(is_contractible(linear({-2, -1})));
  CHECK_FALSE(is_contractible(linear({-2, -1, -2})));
  CHECK_FALSE(is_contractible(linear({-2, -2})));
  // Contracting either (-1) here leaves a 0- or (+1)-vertex stuck.
  CHECK_FALSE(is_contractible(linear({-2, -1, -1})));
  CHECK_FALSE(is_contractible(linear({-1, -1})));
  CHECK(is_contractible(WeightedTree{}));
}

TEST_CASE("component classification") {
  auto types = classify_components(mixed_types_example());
  REQUIRE(types.size() == 5);  // components 2..6
  CHECK(types[0] == std::pair<int, ComponentType>{2, ComponentType::Plus});
  CHECK(types[1] == std::pair<int, ComponentType>{3, ComponentType::Star});
  CHECK(types[2] == std::pair<int, ComponentType>{4, ComponentType::Plus});
  CHECK(types[3] == std::pair<int, ComponentType>{5, ComponentType::Star});
  CHECK(types[4] == std::pair<int, ComponentType>{6, ComponentType::Plus});
  CHECK(component_type_str(ComponentType::Plus) == "+");
  CHECK(component_type_str(ComponentType::Star) == "*");
}

TEST_CASE("star condition") {
  CHECK(condition_star(running_example()));
  CHECK_FALSE(condition_star(mixed_types_example()));
  // A feather on the end component breaks the star condition.
  ExtendedDivisor d = running_example();
  d.feathers.push_back(feather_at(6, 2, 0));
  CHECK_FALSE(condition_star(d));
}

TEST_CASE("exceptional sets of the running example") {
  ExtendedDivisor d = running_example();
  CHECK(exceptional_set(d) == std::set<int>{3, 5});
  CHECK(exceptional_set_dual(d) == std::set<int>{5});
  CHECK(exceptional_union(d) == std::set<int>{3, 5});
}
