#include "giz/enumerate.hpp"

#include <algorithm>
#include <map>

#include "giz/error.hpp"
#include "giz/serieslift.hpp"

namespace giz {
namespace {

// Shape = prefix-closed path set.  Shapes with exactly k nodes, memoized;
// deterministic order by the recursive left/right split.
const std::vector<std::vector<std::string>>& shapes_of_size(int k) {
  static std::map<int, std::vector<std::vector<std::string>>> memo;
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<std::string>> out;
  if (k == 0) {
    out.push_back({});
  } else {
    for (int left = 0; left <= k - 1; ++left) {
      for (const auto& ls : shapes_of_size(left)) {
        for (const auto& rs : shapes_of_size(k - 1 - left)) {
          std::vector<std::string> shape{""};
          for (const std::string& p : ls) shape.push_back("L" + p);
          for (const std::string& p : rs) shape.push_back("R" + p);
          out.push_back(std::move(shape));
        }
      }
    }
  }
  return memo.emplace(k, std::move(out)).first->second;
}

BlowupTree tree_of_paths(std::vector<std::string> paths) {
  std::sort(paths.begin(), paths.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  BlowupTree t;
  std::map<std::string, int> id;
  for (const std::string& p : paths) {
    TreeNode node;
    node.path = p;
    int my = static_cast<int>(t.nodes.size());
    if (!p.empty()) {
      node.parent = id.at(p.substr(0, p.size() - 1));
      (p.back() == 'L' ? t.nodes[node.parent].left : t.nodes[node.parent].right) = my;
    }
    id[p] = my;
    t.nodes.push_back(std::move(node));
  }
  return t;
}

LiftWord creation_word(const std::string& path) {
  LiftWord w;
  for (char c : path) w.push_back(c == 'L' ? LiftLetter::L : LiftLetter::R);
  w.push_back(LiftLetter::R);
  return w;
}

bool is_palindrome_seq(const WeightedChain& tail) {
  WeightedChain rev(tail.rbegin(), tail.rend());
  return rev == tail;
}

void note_failure(SweepReport& r, const std::string& what) {
  ++r.counterexamples;
  if (r.first_counterexample.empty()) r.first_counterexample = what;
}

}  // namespace

std::vector<BlowupTree> enumerate_subtrees(int max_nodes) {
  if (max_nodes < 0) throw ValidationError("max_nodes must be >= 0");
  std::vector<BlowupTree> out;
  for (int k = 0; k <= max_nodes; ++k)
    for (const auto& shape : shapes_of_size(k)) out.push_back(tree_of_paths(shape));
  return out;
}

std::optional<ExtendedDivisor> star_realization(const WeightedChain& tail) {
  if (tail.size() < 2) return std::nullopt;
  if (tail.front() > -2 || tail.back() > -2) return std::nullopt;  // end feathers forced
  ExtendedDivisor d;
  d.chain = {0, 0};
  for (int v : tail) d.chain.push_back(std::min(v, -2));
  const int n = d.n();
  for (int i = 3; i <= n - 1; ++i) {
    int ri = tail[i - 2] - d.chain[i];
    for (int j = 1; j <= ri; ++j) {
      Feather f;
      f.component = i;
      f.point = cstar(Rat(1), Rat(j) / Rat(ri + 1));
      d.feathers.push_back(std::move(f));
    }
  }
  validate(d);
  if (!condition_star(d)) return std::nullopt;
  return d;
}

SweepReport run_sweep(const std::string& property, int max_blowups) {
  if (max_blowups < 1 || max_blowups > 13)
    throw ValidationError("max blowups must lie in [1, 13]");
  bool known = false;
  for (const std::string& name : sweep_property_names())
    if (name == property) known = true;
  if (!known) throw ValidationError("unknown sweep property: " + property);

  SweepReport rep;
  rep.property = property;
  for (const BlowupTree& t : enumerate_subtrees(max_blowups - 1)) {
    ++rep.trees;
    WeightedChain tail = chain_of_tree(t);
    const int n = static_cast<int>(tail.size()) + 1;

    if (property == "claim3") {
      std::set<int> exc = exceptional_components(tail);
      for (const auto& [comp, kl] : tail_component_kl(tail)) {
        ++rep.cases;
        if ((kl.second == 1) != (exc.count(comp) > 0))
          note_failure(rep, chain_str(tail) + ": component " + std::to_string(comp) +
                                " has l = " + std::to_string(kl.second));
      }
    } else if (property == "odd-n-symmetry") {
      if (n % 2 == 1 && is_palindrome_seq(tail)) {
        ++rep.cases;
        if (star_realization(tail))
          note_failure(rep, chain_str(tail) + ": odd-n palindromic tail realized");
      }
    } else if (property == "exceptional-invariants") {
      std::set<int> exc = exceptional_components(tail);
      if (!t.nodes.empty()) {
        ++rep.cases;
        if (!exc.count(n - 1))
          note_failure(rep, chain_str(tail) + ": C_" + std::to_string(n - 1) +
                                " not exceptional");
      }
      if (is_palindrome_seq(tail)) {
        WeightedChain rev(tail.rbegin(), tail.rend());
        ++rep.cases;
        if (exceptional_components(rev) != exc)
          note_failure(rep, chain_str(tail) + ": exceptional set differs on reversal");
        if (n % 2 == 0 && !t.nodes.empty()) {
          ++rep.cases;
          if (!exc.count(n / 2 + 1))
            note_failure(rep, chain_str(tail) + ": middle component not exceptional");
        }
      }
    } else {  // determinants
      std::vector<std::pair<long, long>> pq;
      for (const TreeNode& node : t.nodes) {
        ++rep.cases;
        pq.push_back(scaling_exponents(creation_word(node.path)));  // det check inside
      }
      for (std::size_t a = 0; a < pq.size(); ++a)
        for (std::size_t b = a + 1; b < pq.size(); ++b) {
          ++rep.cases;
          if (pq[a].first * pq[b].second - pq[b].first * pq[a].second == 0)
            note_failure(rep, chain_str(tail) + ": dependent scaling exponents");
        }
    }
  }
  return rep;
}

std::vector<std::string> sweep_property_names() {
  return {"claim3", "odd-n-symmetry", "exceptional-invariants", "determinants"};
}

std::string sweep_report_str(const SweepReport& r) {
  std::string s = r.property + ": " + std::to_string(r.trees) + " trees, " +
                  std::to_string(r.cases) + " cases, " +
                  std::to_string(r.counterexamples) + " counterexamples";
  if (r.counterexamples > 0) s += " (first: " + r.first_counterexample + ")";
  return s;
}

}  // namespace giz
