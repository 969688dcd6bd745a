#pragma once

#include <set>
#include <string>
#include <vector>

#include "giz/chain.hpp"

namespace giz {

/*
 * Blowup words.
 *
 * Starting from the affine quadric completion, the boundary tail
 * [C_2, ..., C_n] of a surface is produced by a sequence of blowups encoded
 * as a word:
 *
 *   OuterStart  -- the initial outer blowup: [C_2] = [0] becomes
 *                  [C_2(-1), E_1(-1)], and the working center is the
 *                  intersection C_2 . E_1.
 *   L / R       -- blow up the current center, inserting a fresh (-1)-curve E
 *                  between the marked pair (T, S) and decrementing both; then
 *                  re-aim the center at (T, E) for L or (E, S) for R.  In the
 *                  chart attached to the new center the left member is the
 *                  {t = 0} axis and the right member the {s = 0} axis.
 *   Jump(e)     -- re-aim the center at the edge between chain positions e
 *                  and e+1 without blowing up.  The coordinate relation is
 *                  the identity; a Jump breaks a staircase run.
 *
 * Every word with all centers on the boundary yields a negative-definite
 * tail; [OuterStart, R, R] gives (-2, -2, -1, -3).
 *
 * The inner blowups form an ancestor-closed subtree of the infinite binary
 * tree rooted at the edge (C_2 | E_1): the creature of a blowup at a node's
 * left (right) child edge sits immediately left (right) of that node in the
 * chain, which is [C_2, in-order traversal, E_1].  The subtree -- not the
 * word -- is the invariant content: recover_words() enumerates every
 * creation order compatible with a chain, and enumeration sweeps iterate
 * over subtrees directly.
 */

struct Letter {
  enum Kind { OuterStart, L, R, Jump } kind;
  int edge = -1;  // Jump only: left position of the target edge

  bool operator==(const Letter&) const = default;
};

using BlowupWord = std::vector<Letter>;

std::string word_str(const BlowupWord& w);

// The boundary tail produced by a word; the empty word yields [0] (the
// untouched C_2).  Validates word shape (OuterStart first and only there,
// Jump edges in range).
WeightedChain generate_chain(const BlowupWord& w);

/*
 * Binary-tree model.  Nodes are stored in an arena; `path` is the root-to-
 * node string over {L, R}, which doubles as the chart-ancestry word of the
 * component the node created.  chain_position is the node's in-order index,
 * so its component index in [C_2 .. C_n] is chain_position + 3 (C_2 is
 * component 2 and the in-order block starts at component 3).
 */
struct TreeNode {
  int left = -1, right = -1, parent = -1;
  std::string path;
  int chain_position = -1;
};

struct BlowupTree {
  std::vector<TreeNode> nodes;  // node 0 is the root when nonempty

  int size() const { return static_cast<int>(nodes.size()); }
};

// The tail realized by performing the subtree's blowups (any ancestor-first
// order; the chain does not depend on it).  The empty tree gives (-1, -1).
WeightedChain chain_of_tree(const BlowupTree& t);

// Reconstruct the subtree of a realizable tail, together with nothing else;
// throws ValidationError if the tail is not realizable by any word.
BlowupTree tree_of_chain(const WeightedChain& tail);

// All canonical words realizing the tail, one per creation order.  The
// canonical encoding walks the creation order greedily: a letter's L/R aim
// points at the next node when that node sits on a child edge of the current
// one, and defaults to R followed by a Jump otherwise.  (0) has exactly the
// empty word; (-1,-1) has exactly [OuterStart].
std::vector<BlowupWord> recover_words(const WeightedChain& tail);

// Number of creation orders of a subtree (linear extensions of its ancestor
// order); recover_words returns exactly this many words.
long count_creation_orders(const BlowupTree& t);

// Length of the initial staircase run: maximal prefix of R letters after
// OuterStart, stopped by the first L or Jump.
int initial_r_run(const BlowupWord& w);

/*
 * Exceptional components of a tail.
 *
 * Among all words realizing the tail, those whose initial staircase run is
 * longest single out the components created during that run; these form the
 * exceptional set, reported by component index.  They are exactly the
 * rightmost-spine nodes of the subtree, and the component C_{n-1} is always
 * among them once any inner blowup happened.  All run-maximal words must
 * agree on the set; disagreement would be a structural impossibility and is
 * checked at run time.
 */
std::set<int> exceptional_components(const WeightedChain& tail);

// Fold of the chart-exponent recurrence over a component's creation word
// (its tree path plus a final R), starting from (k, l) = (0, 1):
//   L: k <- k + l;   R: l <- k + l.
// l == 1 exactly for staircase components.
std::pair<long, long> component_kl(const std::string& path_plus_r);

// Per-inner-component (k, l) for a realizable tail, keyed by component index.
std::vector<std::pair<int, std::pair<long, long>>> tail_component_kl(const WeightedChain& tail);

}  // namespace giz
