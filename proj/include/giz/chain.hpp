#pragma once

#include <optional>
#include <string>
#include <vector>

#include "giz/rational.hpp"

namespace giz {

/*
 * Weighted chains (zigzags).
 *
 * A chain is an ordered sequence of integer self-intersection weights
 * [w_0, w_1, ..., w_n] for a linear configuration of rational curves
 * C_0 - C_1 - ... - C_n.  The order is part of the data: elementary shifts
 * act on a fixed orientation, and the left end (C_0) is where the standard
 * form keeps its zeros.
 *
 * Standard form:    [0, 0, w_2, ..., w_n] with every w_i <= -2, or an
 *                   all-zero chain of length at most 3.
 * m-standard form:  [0, -m, w_2, ..., w_n] with every w_i <= -2 (m >= 0).
 *
 * The elementary shift at a vertex of weight 0 is the blowup of one of the
 * two intersection points on that curve followed by the contraction of the
 * curve itself.  On a fixed orientation this reads:
 *
 *   inner vertex i (0 < i < n), direction left:
 *       w_{i-1} -= 1,  w_{i+1} += 1          (right is the inverse)
 *   end vertex (i = 0 or i = n): the single neighbor changes by 1,
 *       toward the interior -1, away from it +1; the end stays at 0 and the
 *       length is preserved.  E.g. ([0,0], 0, right) -> [0,-1] and
 *       ([0,-1,...], 0, left) -> [0,0,...].
 *
 * Shifts at distinct charts compose to every birational reshuffling of the
 * boundary that fixes the orientation; the oriented standard form is unique,
 * which is what makes standardize() well-defined.  Reversion -- the genuinely
 * different move [0,-1,w_2..w_n] -> [0,-1,w_n..w_2] -- is reverse_chain().
 */

using WeightedChain = std::vector<int>;

enum class ShiftDir { Left, Right };

// True for [0,0,w_2..w_n] with all w_i <= -2, or all-zero of length <= 3.
bool is_standard(const WeightedChain& c);

// True for [0,-m,w_2..w_n] with all w_i <= -2; reports m.  Standard chains
// are exactly the 0-standard ones (plus the short all-zero forms).
std::optional<int> m_standard_level(const WeightedChain& c);

// Whether the tail w_2..w_n reads the same in both directions, i.e. the
// standard form is fixed by reversion.  Requires a standard or m-standard
// chain.
bool is_palindrome_tail(const WeightedChain& c);

// One elementary shift; throws ValidationError if the vertex is out of range,
// its weight is not 0, or an inner direction has no neighbor on that side.
WeightedChain elementary_shift(const WeightedChain& c, int vertex, ShiftDir dir);

// Reversion of a standard or 1-standard chain: [0,-m,w_2..w_n] with m <= 1
// becomes [0,-m,w_n..w_2].  Involutive.
WeightedChain reverse_chain(const WeightedChain& c);

struct StandardizeResult {
  WeightedChain chain;
  // Human-readable move log, one entry per applied move ("shift v3 left",
  // "blow down vertex 2", ...).
  std::vector<std::string> log;
};

// Breadth-first search over elementary shifts and blowdowns of (-1)-vertices
// to the standard form.  The search radius honors GIZCTL_MAX_DEPTH
// (default 64) and a node budget; exhaustion raises SearchLimitError with a
// description of the frontier.  The oriented standard form is unique, so the
// result does not depend on tie-breaking.
StandardizeResult standardize(const WeightedChain& c);

// Search depth limit: value of GIZCTL_MAX_DEPTH if set, else the default 64.
int search_depth_limit();

/*
 * Hirzebruch--Jung continued fractions,
 *
 *     p/q = k_1 - 1/(k_2 - 1/(... - 1/k_r)),   all k_i >= 2,
 *
 * for coprime p > q >= 1.  hj_expand computes [k_1..k_r]; hj_value folds it
 * back.  The dual string identity hj(d/e) reversed = hj(d/e') with
 * e*e' == 1 mod d is exercised in the tests and the toric reports.
 */
std::vector<int> hj_expand(long p, long q);
Rat hj_value(const std::vector<int>& ks);

/*
 * Contraction search on linear chains.  One contraction step removes a
 * (-1)-vertex: an end vertex disappears and its neighbor gains 1; an inner
 * vertex disappears, both neighbors gain 1 and become adjacent.  The final
 * stuck form depends on the order (e.g. [0,0,-1,-1] can end at [0,1,0] or
 * [0,0,0]), so reachability questions are decided by searching over orders.
 */

// Can some contraction order take `c` to exactly `target`?
bool chain_contracts_to(const WeightedChain& c, const WeightedChain& target);

std::string chain_str(const WeightedChain& c);

}  // namespace giz
