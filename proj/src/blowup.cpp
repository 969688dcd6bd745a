#include "giz/blowup.hpp"

#include <algorithm>
#include <sstream>

#include "giz/error.hpp"

namespace giz {

std::string word_str(const BlowupWord& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    switch (w[i].kind) {
      case Letter::OuterStart: os << "O"; break;
      case Letter::L: os << "L"; break;
      case Letter::R: os << "R"; break;
      case Letter::Jump: os << "J" << w[i].edge; break;
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Identities of chain entries during a replay: the two outer curves and the
// created nodes by arena index.
constexpr int kC2 = -2;
constexpr int kE1 = -1;

struct Replay {
  std::vector<int> weights;
  std::vector<int> entries;  // kC2 / kE1 / node arena index
  int ti = -1, si = -1;      // marked pair (adjacent chain positions)
  BlowupTree tree;
  std::vector<int> created;  // arena indices in creation order
  // Creation time, larger = later; the outer curves predate every node.
  int time_of(int entry) const { return entry < 0 ? entry : entry + 1; }
};

void replay_outer_start(Replay& r) {
  r.weights = {-1, -1};
  r.entries = {kC2, kE1};
  r.ti = 0;
  r.si = 1;
}

// Blow up the current center and aim per the letter.
void replay_letter(Replay& r, Letter::Kind kind) {
  const int t_entry = r.entries[r.ti], s_entry = r.entries[r.si];
  TreeNode node;
  int id = static_cast<int>(r.tree.nodes.size());
  if (t_entry == kC2 && s_entry == kE1) {
    node.parent = -1;
    node.path = "";
  } else if (r.time_of(t_entry) > r.time_of(s_entry)) {
    // The later endpoint is on the left: its right child edge.
    node.parent = t_entry;
    node.path = r.tree.nodes[t_entry].path + "R";
    r.tree.nodes[t_entry].right = id;
  } else {
    node.parent = s_entry;
    node.path = r.tree.nodes[s_entry].path + "L";
    r.tree.nodes[s_entry].left = id;
  }
  r.tree.nodes.push_back(node);
  r.created.push_back(id);

  r.weights[r.ti] -= 1;
  r.weights[r.si] -= 1;
  r.weights.insert(r.weights.begin() + r.si, -1);
  r.entries.insert(r.entries.begin() + r.si, id);
  if (kind == Letter::L) {
    // Pair becomes (T, E): ti unchanged, si is the new curve.
    // (Indices already point there after the insertion.)
  } else {
    r.ti = r.si;
    r.si = r.ti + 1;
  }
}

Replay replay_word(const BlowupWord& w) {
  Replay r;
  if (w.empty()) {
    r.weights = {0};
    r.entries = {kC2};
    return r;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& let = w[i];
    if ((let.kind == Letter::OuterStart) != (i == 0))
      throw ValidationError("OuterStart must appear exactly once, at the front: " + word_str(w));
    switch (let.kind) {
      case Letter::OuterStart:
        replay_outer_start(r);
        break;
      case Letter::L:
      case Letter::R:
        replay_letter(r, let.kind);
        break;
      case Letter::Jump:
        if (let.edge < 0 || let.edge + 1 >= static_cast<int>(r.weights.size()))
          throw ValidationError("Jump edge out of range in " + word_str(w));
        r.ti = let.edge;
        r.si = let.edge + 1;
        break;
    }
  }
  // In-order bookkeeping: a node's chain position is its index among nodes.
  for (std::size_t p = 0; p < r.entries.size(); ++p)
    if (r.entries[p] >= 0) r.tree.nodes[r.entries[p]].chain_position = static_cast<int>(p) - 1;
  return r;
}

}  // namespace

WeightedChain generate_chain(const BlowupWord& w) {
  return replay_word(w).weights;
}

WeightedChain chain_of_tree(const BlowupTree& t) {
  if (t.nodes.empty()) return {-1, -1};
  // Insert ancestor-first at in-order positions; each insertion separates the
  // two curves it blows up.
  std::vector<int> order(t.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.nodes[a].path.size() < t.nodes[b].path.size(); });
  std::vector<int> entries{kC2, kE1};
  std::vector<int> weights{-1, -1};
  for (int id : order) {
    int pos;
    if (t.nodes[id].parent < 0) {
      pos = 1;
    } else {
      auto it = std::find(entries.begin(), entries.end(), t.nodes[id].parent);
      int pp = static_cast<int>(it - entries.begin());
      pos = t.nodes[id].path.back() == 'L' ? pp : pp + 1;
    }
    weights[pos - 1] -= 1;
    weights[pos] -= 1;
    weights.insert(weights.begin() + pos, -1);
    entries.insert(entries.begin() + pos, id);
  }
  return weights;
}

namespace {

// All reverse-contraction orders of a tail.  Each order lists tail positions
// (indices into the input) in creation order; C_2 (position 0) is never an
// exceptional curve and the final undo of OuterStart needs exactly (-1,-1).
void recover_orders_rec(std::vector<int>& weights, std::vector<int>& positions,
                        std::vector<int>& contracted, std::vector<std::vector<int>>& out,
                        std::size_t cap) {
  if (out.size() > cap)
    throw SearchLimitError("word recovery: too many creation orders");
  if (weights.size() == 2 && weights[0] == -1 && weights[1] == -1) {
    out.emplace_back(contracted.rbegin(), contracted.rend());
    return;
  }
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    if (weights[i] != -1) continue;
    int w = weights[i], p = positions[i];
    weights[i - 1] += 1;
    weights[i + 1] += 1;
    weights.erase(weights.begin() + i);
    positions.erase(positions.begin() + i);
    contracted.push_back(p);
    recover_orders_rec(weights, positions, contracted, out, cap);
    contracted.pop_back();
    positions.insert(positions.begin() + i, p);
    weights.insert(weights.begin() + i, w);
    weights[i - 1] -= 1;
    weights[i + 1] -= 1;
  }
}

std::vector<std::vector<int>> recover_orders(const WeightedChain& tail) {
  if (tail == WeightedChain{0}) return {{}};
  if (tail.size() < 2) return {};
  std::vector<int> weights = tail;
  std::vector<int> positions(tail.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = static_cast<int>(i);
  std::vector<int> contracted;
  std::vector<std::vector<int>> out;
  recover_orders_rec(weights, positions, contracted, out, 200'000);
  return out;
}

// Child-slot identity: the root slot or a (node, side) pair.
struct Slot {
  int node = -1;  // -1: root slot
  char side = 0;

  bool operator==(const Slot&) const = default;
};

Slot slot_of(const BlowupTree& t, int id) {
  const TreeNode& n = t.nodes[id];
  if (n.parent < 0) return {};
  return {n.parent, n.path.back()};
}

}  // namespace

BlowupTree tree_of_chain(const WeightedChain& tail) {
  auto orders = recover_orders(tail);
  if (orders.empty())
    throw ValidationError("tail is not realizable by any blowup word: " + chain_str(tail));
  if (tail == WeightedChain{0}) return {};
  // Replay one creation order to reconstruct the subtree.  Chain entries are
  // final tail positions; creation times grow along the order.
  const auto& order = orders.front();
  BlowupTree tree;
  std::vector<int> entries{0, static_cast<int>(tail.size()) - 1};  // positions of C_2, E_1
  std::vector<int> node_at(tail.size(), -1);
  std::vector<int> time(tail.size(), 0);
  time[0] = time[tail.size() - 1] = -1;  // outer curves predate everything
  int clock = 0;
  for (int pos : order) {
    auto it = std::lower_bound(entries.begin(), entries.end(), pos);
    int right_pos = *it, left_pos = *(it - 1);
    TreeNode node;
    node.chain_position = pos - 1;
    int id = static_cast<int>(tree.nodes.size());
    if (time[left_pos] < 0 && time[right_pos] < 0) {
      node.parent = -1;
    } else if (time[left_pos] > time[right_pos]) {
      node.parent = node_at[left_pos];
      node.path = tree.nodes[node.parent].path + "R";
      tree.nodes[node.parent].right = id;
    } else {
      node.parent = node_at[right_pos];
      node.path = tree.nodes[node.parent].path + "L";
      tree.nodes[node.parent].left = id;
    }
    tree.nodes.push_back(node);
    node_at[pos] = id;
    time[pos] = ++clock;
    entries.insert(it, pos);
  }
  return tree;
}

std::vector<BlowupWord> recover_words(const WeightedChain& tail) {
  auto orders = recover_orders(tail);
  if (orders.empty()) return {};
  if (tail == WeightedChain{0}) return {BlowupWord{}};
  BlowupTree tree = tree_of_chain(tail);
  std::vector<int> node_of_pos(tail.size(), -1);
  for (int id = 0; id < tree.size(); ++id) node_of_pos[tree.nodes[id].chain_position + 1] = id;

  std::vector<BlowupWord> words;
  words.reserve(orders.size());
  for (const auto& order : orders) {
    BlowupWord w{{Letter::OuterStart, -1}};
    Slot center{};  // root slot after OuterStart
    bool run_broken = false;  // true once a Jump or L letter ends the initial R-run
    std::vector<int> entries{0, static_cast<int>(tail.size()) - 1};
    for (std::size_t i = 0; i < order.size(); ++i) {
      int pos = order[i], id = node_of_pos[pos];
      Slot target = slot_of(tree, id);
      auto it = std::lower_bound(entries.begin(), entries.end(), pos);
      if (!(target == center)) {
        w.push_back({Letter::Jump, static_cast<int>(it - entries.begin()) - 1});
        run_broken = true;
      }
      // Aim at the next creation when it sits on a child edge of this node,
      // but never break the initial staircase run for the sake of aim: while
      // the run is intact an R keeps it going and a Jump re-aims afterwards.
      Letter::Kind kind = Letter::R;
      if (run_broken && i + 1 < order.size()) {
        Slot next = slot_of(tree, node_of_pos[order[i + 1]]);
        if (next.node == id) kind = next.side == 'L' ? Letter::L : Letter::R;
      }
      if (kind == Letter::L) run_broken = true;
      w.push_back({kind, -1});
      center = {id, kind == Letter::L ? 'L' : 'R'};
      entries.insert(it, pos);
    }
    words.push_back(std::move(w));
  }
  return words;
}

long count_creation_orders(const BlowupTree& t) {
  // Linear extensions of a rooted forest: n! / prod(subtree sizes).
  if (t.nodes.empty()) return 1;
  std::vector<long> size(t.nodes.size(), 0);
  // Children precede parents in no particular arena order; iterate by depth.
  std::vector<int> order(t.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.nodes[a].path.size() > t.nodes[b].path.size(); });
  for (int id : order) {
    size[id] = 1;
    if (t.nodes[id].left >= 0) size[id] += size[t.nodes[id].left];
    if (t.nodes[id].right >= 0) size[id] += size[t.nodes[id].right];
  }
  long out = 1;
  for (int k = 2; k <= t.size(); ++k) out *= k;
  for (std::size_t i = 0; i < size.size(); ++i) out /= size[i];
  return out;
}

int initial_r_run(const BlowupWord& w) {
  int run = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].kind != Letter::R) break;
    ++run;
  }
  return run;
}

std::set<int> exceptional_components(const WeightedChain& tail) {
  auto words = recover_words(tail);
  if (words.empty())
    throw ValidationError("exceptional components are only defined for realizable tails, got " +
                          chain_str(tail));
  if (tail == WeightedChain{0}) return {};

  int best = -1;
  for (const auto& w : words) best = std::max(best, initial_r_run(w));

  std::set<int> out;
  bool have = false;
  for (const auto& w : words) {
    if (initial_r_run(w) != best) continue;
    // Components created by the staircase-run letters of this word.
    Replay r = replay_word(w);
    std::set<int> s;
    for (int i = 0; i < best; ++i)
      s.insert(r.tree.nodes[r.created[i]].chain_position + 3);
    if (have && s != out)
      throw TheoryError("run-maximal words disagree on the exceptional set for " + chain_str(tail));
    out = std::move(s);
    have = true;
  }

  // Cross-check: the exceptional components are the rightmost-spine nodes.
  BlowupTree tree = tree_of_chain(tail);
  std::set<int> spine;
  for (int id = 0; id >= 0 && id < tree.size();) {
    spine.insert(tree.nodes[id].chain_position + 3);
    id = tree.nodes[id].right;
  }
  if (tree.size() > 0 && spine != out)
    throw TheoryError("staircase runs and the rightmost spine disagree for " + chain_str(tail));
  if (tree.size() > 0) {
    int n = static_cast<int>(tail.size()) + 1;
    if (!out.count(n - 1))
      throw TheoryError("C_{n-1} missing from the exceptional set of " + chain_str(tail));
  }
  return out;
}

std::pair<long, long> component_kl(const std::string& path_plus_r) {
  long k = 0, l = 1;
  for (char c : path_plus_r) {
    if (c == 'L')
      k += l;
    else if (c == 'R')
      l += k;
    else
      throw ValidationError("creation word must be over {L,R}");
  }
  return {k, l};
}

std::vector<std::pair<int, std::pair<long, long>>> tail_component_kl(const WeightedChain& tail) {
  BlowupTree tree = tree_of_chain(tail);
  std::vector<std::pair<int, std::pair<long, long>>> out;
  for (int id = 0; id < tree.size(); ++id)
    out.emplace_back(tree.nodes[id].chain_position + 3, component_kl(tree.nodes[id].path + "R"));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace giz
