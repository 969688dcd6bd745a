#include "giz/extdiv.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

#include "giz/error.hpp"

namespace giz {

int ExtendedDivisor::r(int i) const {
  int out = 0;
  for (const auto& f : feathers)
    if (f.component == i) ++out;
  return out;
}

WeightedChain ExtendedDivisor::pre_feather_tail() const {
  WeightedChain out;
  for (int i = 2; i <= n(); ++i) out.push_back(v(i));
  return out;
}

std::vector<const Feather*> ExtendedDivisor::feathers_on(int i) const {
  std::vector<const Feather*> out;
  for (const auto& f : feathers)
    if (f.component == i) out.push_back(&f);
  return out;
}

PointSet ExtendedDivisor::base_points(int i) const {
  std::vector<CStarPoint> pts;
  for (const auto& f : feathers)
    if (f.component == i) pts.push_back(f.point);
  return make_point_set(std::move(pts));
}

PointSet ExtendedDivisor::base_points(int i, int tail_len) const {
  std::vector<CStarPoint> pts;
  for (const auto& f : feathers)
    if (f.component == i && static_cast<int>(f.tail.size()) == tail_len) pts.push_back(f.point);
  return make_point_set(std::move(pts));
}

int ExtendedDivisor::max_tail_len(int i) const {
  int out = 0;
  for (const auto& f : feathers)
    if (f.component == i) out = std::max(out, static_cast<int>(f.tail.size()));
  return out;
}

void validate(const ExtendedDivisor& d) {
  auto m = m_standard_level(d.chain);
  if (!is_standard(d.chain) && (!m || *m > 1))
    throw ValidationError("boundary chain must be standard or 1-standard, got " + chain_str(d.chain));
  const int n = d.n();
  std::map<int, std::vector<CStarPoint>> per_component;
  for (const auto& f : d.feathers) {
    if (f.component < 2 || f.component > n)
      throw ValidationError("feather attachment index " + std::to_string(f.component) +
                            " outside [2, " + std::to_string(n) + "]");
    if (f.bridge != -1)
      throw ValidationError("feather bridge must have weight -1");
    for (int w : f.tail)
      if (w > -2)
        throw ValidationError("feather tail weights must be <= -2, got " + std::to_string(w));
    if (f.point.modulus <= 0)
      throw ValidationError("feather base point must have positive modulus");
    if (f.point.angle < 0 || f.point.angle >= 1)
      throw ValidationError("angle must lie in [0,1)");
    if (f.mother && (*f.mother < 2 || *f.mother > n))
      throw ValidationError("feather mother index out of range");
    per_component[f.component].push_back(f.point);
  }
  for (auto& [i, pts] : per_component) {
    auto uniq = make_point_set(pts);
    if (uniq.size() != pts.size())
      throw ValidationError("feathers on C_" + std::to_string(i) + " share a base point");
  }
}

namespace {

// Live-subgraph contraction state over a fixed vertex arena.
struct ContractState {
  std::vector<int> weight;                 // INT_MIN marks a removed vertex
  std::vector<std::set<int>> adj;

  static constexpr int kDead = INT_MIN;

  std::string key() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < weight.size(); ++v) {
      if (weight[v] == kDead) continue;
      os << v << ":" << weight[v] << ";";
      for (int u : adj[v]) os << u << ",";
      os << "|";
    }
    return os.str();
  }

  bool empty() const {
    return std::all_of(weight.begin(), weight.end(), [](int w) { return w == kDead; });
  }
};

bool contract_search(ContractState& s, std::set<std::string>& seen) {
  if (s.empty()) return true;
  if (!seen.insert(s.key()).second) return false;
  if (seen.size() > 500'000)
    throw SearchLimitError("tree contraction: state budget exhausted");
  for (std::size_t v = 0; v < s.weight.size(); ++v) {
    if (s.weight[v] != -1 || s.adj[v].size() > 2) continue;
    // Contract v, remember enough to undo.
    std::vector<int> nb(s.adj[v].begin(), s.adj[v].end());
    int w = s.weight[v];
    s.weight[v] = ContractState::kDead;
    for (int u : nb) {
      s.adj[u].erase(static_cast<int>(v));
      s.weight[u] += 1;
    }
    bool joined = false;
    if (nb.size() == 2 && !s.adj[nb[0]].count(nb[1])) {
      s.adj[nb[0]].insert(nb[1]);
      s.adj[nb[1]].insert(nb[0]);
      joined = true;
    }
    bool ok = contract_search(s, seen);
    if (joined) {
      s.adj[nb[0]].erase(nb[1]);
      s.adj[nb[1]].erase(nb[0]);
    }
    for (int u : nb) {
      s.adj[u].insert(static_cast<int>(v));
      s.weight[u] -= 1;
    }
    s.weight[v] = w;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_contractible(const WeightedTree& t) {
  ContractState s;
  s.weight = t.weight;
  s.adj.resize(t.weight.size());
  for (auto [a, b] : t.edges) {
    s.adj[a].insert(b);
    s.adj[b].insert(a);
  }
  std::set<std::string> seen;
  return contract_search(s, seen);
}

WeightedTree subtree_above(const ExtendedDivisor& d, int i, int skip_feather) {
  WeightedTree t;
  const int n = d.n();
  std::map<int, int> comp_vertex;
  for (int j = i + 1; j <= n; ++j) {
    int v = t.add(d.chain[j]);
    comp_vertex[j] = v;
    if (j > i + 1) t.link(comp_vertex[j - 1], v);
  }
  for (std::size_t fi = 0; fi < d.feathers.size(); ++fi) {
    const Feather& f = d.feathers[fi];
    if (f.component <= i || static_cast<int>(fi) == skip_feather) continue;
    int prev = t.add(f.bridge);
    t.link(comp_vertex[f.component], prev);
    for (int w : f.tail) {
      int v = t.add(w);
      t.link(prev, v);
      prev = v;
    }
  }
  return t;
}

std::vector<std::pair<int, ComponentType>> classify_components(const ExtendedDivisor& d) {
  validate(d);
  const int n = d.n();
  std::vector<std::pair<int, ComponentType>> out;
  for (int i = 2; i <= n; ++i) {
    bool star = !is_contractible(subtree_above(d, i));
    if (star) {
      for (std::size_t fi = 0; fi < d.feathers.size() && star; ++fi) {
        const Feather& f = d.feathers[fi];
        if (f.component > i && f.mother_index() < i &&
            is_contractible(subtree_above(d, i, static_cast<int>(fi))))
          star = false;
      }
    }
    out.emplace_back(i, star ? ComponentType::Star : ComponentType::Plus);
  }
  return out;
}

bool condition_star(const ExtendedDivisor& d) {
  const int n = d.n();
  if (d.r(2) != 0 || d.r(n) != 0) return false;
  for (auto [i, t] : classify_components(d))
    if (i >= 3 && i <= n - 1 && t != ComponentType::Star) return false;
  return true;
}

std::set<int> exceptional_set(const ExtendedDivisor& d) {
  return exceptional_components(d.pre_feather_tail());
}

std::set<int> exceptional_set_dual(const ExtendedDivisor& d) {
  WeightedChain tail = d.pre_feather_tail();
  std::reverse(tail.begin(), tail.end());
  return exceptional_components(tail);
}

std::set<int> exceptional_union(const ExtendedDivisor& d) {
  std::set<int> out = exceptional_set(d);
  const int n = d.n();
  for (int j : exceptional_set_dual(d)) out.insert(n + 2 - j);
  return out;
}

std::string component_type_str(ComponentType t) {
  return t == ComponentType::Plus ? "+" : "*";
}

}  // namespace giz
