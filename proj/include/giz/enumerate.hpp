#pragma once

// Exhaustive sweeps over all blowup subtrees up to a given size.
//
// Every boundary tail with at most K blowups corresponds to an ancestor-
// closed subtree of the binary tree with at most K - 1 nodes (the first
// blowup creates E_1, each node one more).  The sweep enumerates every
// subtree shape (Catalan-many per size: 626 shapes up to 7 nodes, 2056 up
// to 8), realizes each as a tail, and checks one of four structural claims
// on all of them, reporting the number of cases and counterexamples.
//
// Properties:
//   "claim3"                  l(C_i) == 1 exactly for the exceptional
//                             components of the tail, for every component.
//   "odd-n-symmetry"          no palindromic tail of odd n admits a
//                             star-condition realization.
//   "exceptional-invariants"  C_{n-1} is always exceptional; for palindromic
//                             tails the middle component is exceptional and
//                             the exceptional set equals its reversed dual.
//   "determinants"            every chart matrix has determinant 1 and the
//                             scaling exponent pairs (p, q) are pairwise
//                             linearly independent.
//
// The canonical star-condition realization of a tail (v_2..v_n) keeps
// w_i = min(v_i, -2) and hangs r_i = v_i - w_i feathers on C_i at the unit-
// modulus points with angles j/(r_i + 1), j = 1..r_i; tails that would force
// feathers on C_2 or C_n, or fail the star condition, have no realization.

#include <optional>
#include <string>
#include <vector>

#include "giz/blowup.hpp"
#include "giz/extdiv.hpp"

namespace giz {

struct SweepReport {
  std::string property;
  long trees = 0;            // subtree shapes enumerated
  long cases = 0;            // individual checks performed
  long counterexamples = 0;  // checks that failed
  std::string first_counterexample;  // description of the first failure
};

// All subtree shapes with at most max_nodes nodes, each realized as a
// BlowupTree.  Deterministic order: by size, then by recursive split.
std::vector<BlowupTree> enumerate_subtrees(int max_nodes);

// The canonical star-condition realization of a tail, if it has one.
std::optional<ExtendedDivisor> star_realization(const WeightedChain& tail);

// Run one property sweep over all tails with at most max_blowups blowups
// (1 <= max_blowups <= 13).  Unknown property names raise ValidationError.
SweepReport run_sweep(const std::string& property, int max_blowups);

std::vector<std::string> sweep_property_names();

std::string sweep_report_str(const SweepReport& r);

}  // namespace giz
