#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giz/blowup.hpp"
#include "giz/chain.hpp"
#include "giz/rational.hpp"

namespace giz {

/*
 * Extended divisors.
 *
 * The boundary zigzag [C_0, ..., C_n] together with its feathers: each
 * feather is a pendant chain  F = [bridge(-1), tail...]  attached at a base
 * point of some component C_i \ (neighbors) ~ C^*, the tail being a
 * Hirzebruch--Jung string (all weights <= -2, possibly empty).  A feather
 * remembers the component it is attached to, its base point in exact polar
 * form, and optionally the index of its mother component when that differs
 * from the attachment (it never does for the surfaces this library focuses
 * on, where r_2 = r_n = 0 and every inner component is a *-component).
 *
 * Conventions: r_i is the number of feathers attached to C_i, and
 * v_i = w_i + r_i is the weight C_i had before the feather blowups.  The
 * pre-feather tail (v_2, ..., v_n) is what the blowup-word machinery
 * consumes.
 */

struct Feather {
  int component = 0;          // attachment index i, 2 <= i <= n
  int bridge = -1;            // always -1; kept explicit in documents
  std::vector<int> tail;      // HJ weights from the bridge outward
  CStarPoint point{Rat(1), Rat(0)};
  std::optional<int> mother;  // defaults to the attachment component

  int mother_index() const { return mother.value_or(component); }
};

struct ExtendedDivisor {
  WeightedChain chain;            // [w_0 .. w_n]
  std::vector<Feather> feathers;

  int n() const { return static_cast<int>(chain.size()) - 1; }
  int r(int i) const;                 // number of feathers on C_i
  int v(int i) const { return chain[i] + r(i); }
  WeightedChain pre_feather_tail() const;  // (v_2 .. v_n)
  std::vector<const Feather*> feathers_on(int i) const;
  // Base points on C_i, grouped by number of extra blowups (tail length);
  // group s holds the points of feathers whose tail has length s.
  PointSet base_points(int i) const;
  PointSet base_points(int i, int tail_len) const;
  int max_tail_len(int i) const;
};

// Structural validation: chain standard or 1-standard, feather attachment
// indices in [2, n], bridges -1, tail weights <= -2, base points distinct on
// each component, angles already guaranteed in [0,1) by construction.
// Throws ValidationError with a specific message.
void validate(const ExtendedDivisor& d);

/*
 * Contractibility of weighted trees.
 *
 * One step contracts a (-1)-vertex of degree <= 2: isolated vertices vanish;
 * a leaf vanishes and its neighbor gains 1; a degree-2 vertex vanishes, both
 * neighbors gain 1 and become adjacent.  Degree >= 3 vertices never
 * contract.  The tree is contractible when SOME order of steps empties it --
 * the stuck form depends on the order, so this is decided by a memoized
 * search.
 */
struct WeightedTree {
  std::vector<int> weight;
  std::vector<std::pair<int, int>> edges;

  int add(int w) { weight.push_back(w); return static_cast<int>(weight.size()) - 1; }
  void link(int a, int b) { edges.emplace_back(a, b); }
};

bool is_contractible(const WeightedTree& t);

// The subdivisor living over C_{i+1}, ..., C_n: those components plus every
// feather attached to them, as a weighted tree.  skip_feather omits one
// feather (by index into d.feathers).
WeightedTree subtree_above(const ExtendedDivisor& d, int i, int skip_feather = -1);

enum class ComponentType { Plus, Star };

/*
 * Component classification.  C_i is a *-component exactly when the
 * subdivisor above it does not contract away, and stays incontractible after
 * removing any single feather in it whose mother index is smaller than i.
 * C_2 and C_n always come out +; the types drive which configuration
 * invariants (A^1-type vs C^*-type) live on each component.
 */
std::vector<std::pair<int, ComponentType>> classify_components(const ExtendedDivisor& d);

// r_2 = r_n = 0 and every inner component C_3 .. C_{n-1} is a *-component.
bool condition_star(const ExtendedDivisor& d);

// Exceptional component indices of the divisor's pre-feather tail, and of
// the reversed tail; the dual-closed union E pulls the reversed set back
// through the reflection i -> n + 2 - i.
std::set<int> exceptional_set(const ExtendedDivisor& d);
std::set<int> exceptional_set_dual(const ExtendedDivisor& d);
std::set<int> exceptional_union(const ExtendedDivisor& d);

std::string component_type_str(ComponentType t);

}  // namespace giz
