#include "giz/chain.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "giz/error.hpp"

namespace giz {

bool is_standard(const WeightedChain& c) {
  if (c.empty()) return false;
  bool zeros = std::all_of(c.begin(), c.end(), [](int w) { return w == 0; });
  if (zeros) return c.size() <= 3;
  if (c.size() < 2 || c[0] != 0 || c[1] != 0) return false;
  for (std::size_t i = 2; i < c.size(); ++i)
    if (c[i] > -2) return false;
  return true;
}

std::optional<int> m_standard_level(const WeightedChain& c) {
  if (c.size() < 2 || c[0] != 0 || c[1] > 0) return std::nullopt;
  for (std::size_t i = 2; i < c.size(); ++i)
    if (c[i] > -2) return std::nullopt;
  return -c[1];
}

bool is_palindrome_tail(const WeightedChain& c) {
  if (!is_standard(c) && !m_standard_level(c))
    throw ValidationError("palindrome test needs a standard or m-standard chain, got " + chain_str(c));
  if (c.size() <= 2) return true;
  WeightedChain tail(c.begin() + 2, c.end());
  WeightedChain rev(tail.rbegin(), tail.rend());
  return tail == rev;
}

WeightedChain elementary_shift(const WeightedChain& c, int vertex, ShiftDir dir) {
  const int n = static_cast<int>(c.size());
  if (vertex < 0 || vertex >= n)
    throw ValidationError("shift vertex out of range");
  if (c[vertex] != 0)
    throw ValidationError("elementary shift needs weight 0 at vertex " + std::to_string(vertex) +
                          " of " + chain_str(c));
  if (n == 1)
    throw ValidationError("cannot shift a single-vertex chain");
  WeightedChain out = c;
  if (vertex == 0) {
    // End vertex: "right" points toward the interior.
    out[1] += dir == ShiftDir::Right ? -1 : +1;
  } else if (vertex == n - 1) {
    // End vertex: "left" points toward the interior.
    out[n - 2] += dir == ShiftDir::Left ? -1 : +1;
  } else {
    if (dir == ShiftDir::Left) {
      out[vertex - 1] -= 1;
      out[vertex + 1] += 1;
    } else {
      out[vertex - 1] += 1;
      out[vertex + 1] -= 1;
    }
  }
  return out;
}

WeightedChain reverse_chain(const WeightedChain& c) {
  if (c.size() <= 3 && is_standard(c)) return c;
  auto m = m_standard_level(c);
  if (!m || *m > 1)
    throw ValidationError("reversion needs a standard or 1-standard chain, got " + chain_str(c));
  WeightedChain out = c;
  std::reverse(out.begin() + 2, out.end());
  return out;
}

int search_depth_limit() {
  if (const char* env = std::getenv("GIZCTL_MAX_DEPTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
    throw ValidationError(std::string("GIZCTL_MAX_DEPTH must be a positive integer, got \"") + env + "\"");
  }
  return 64;
}

namespace {

struct Move {
  enum Kind { Shift, Blowdown } kind;
  int vertex;
  ShiftDir dir;  // shifts only
};

std::string move_str(const Move& m) {
  if (m.kind == Move::Shift)
    return "shift v" + std::to_string(m.vertex) + (m.dir == ShiftDir::Left ? " left" : " right");
  return "blow down vertex " + std::to_string(m.vertex);
}

// Blow down a (-1)-vertex of a chain.
WeightedChain blow_down(const WeightedChain& c, int vertex) {
  WeightedChain out;
  out.reserve(c.size() - 1);
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    if (i != vertex) out.push_back(c[i]);
  if (vertex > 0) out[vertex - 1] += 1;
  if (vertex < n - 1) out[vertex == 0 ? 0 : vertex] += 1;
  return out;
}

std::vector<Move> legal_moves(const WeightedChain& c) {
  std::vector<Move> out;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0 && n >= 2) {
      out.push_back({Move::Shift, i, ShiftDir::Left});
      out.push_back({Move::Shift, i, ShiftDir::Right});
    }
    if (c[i] == -1 && n >= 2) out.push_back({Move::Blowdown, i, ShiftDir::Left});
  }
  return out;
}

WeightedChain apply_move(const WeightedChain& c, const Move& m) {
  return m.kind == Move::Shift ? elementary_shift(c, m.vertex, m.dir) : blow_down(c, m.vertex);
}

}  // namespace

StandardizeResult standardize(const WeightedChain& c) {
  if (c.empty()) throw ValidationError("cannot standardize an empty chain");
  if (is_standard(c)) return {c, {}};

  const int max_depth = search_depth_limit();
  const std::size_t max_nodes = 2'000'000;

  std::map<WeightedChain, std::pair<WeightedChain, Move>> parent;
  std::set<WeightedChain> seen{c};
  std::queue<std::pair<WeightedChain, int>> frontier;
  frontier.push({c, 0});

  while (!frontier.empty()) {
    auto [cur, depth] = frontier.front();
    frontier.pop();
    if (depth >= max_depth) continue;
    for (const Move& m : legal_moves(cur)) {
      WeightedChain next = apply_move(cur, m);
      if (!seen.insert(next).second) continue;
      parent.emplace(next, std::make_pair(cur, m));
      if (is_standard(next)) {
        std::vector<std::string> log;
        for (WeightedChain at = next; at != c;) {
          const auto& [prev, mv] = parent.at(at);
          log.push_back(move_str(mv) + " -> " + chain_str(at));
          at = prev;
        }
        std::reverse(log.begin(), log.end());
        return {next, log};
      }
      frontier.push({next, depth + 1});
      if (seen.size() > max_nodes)
        throw SearchLimitError("standardize: node budget exhausted after " +
                               std::to_string(seen.size()) + " states from " + chain_str(c));
    }
  }
  throw SearchLimitError("standardize: no standard form within depth " +
                         std::to_string(max_depth) + " from " + chain_str(c) +
                         " (" + std::to_string(seen.size()) + " states examined)");
}

std::vector<int> hj_expand(long p, long q) {
  if (p <= 0 || q <= 0 || p <= q) throw ValidationError("hj_expand needs p > q >= 1");
  if (std::gcd(p, q) != 1) throw ValidationError("hj_expand needs coprime p, q");
  std::vector<int> ks;
  while (true) {
    long k = (p + q - 1) / q;  // ceil(p/q)
    ks.push_back(static_cast<int>(k));
    long r = k * q - p;  // k - p/q = r/q with 0 <= r < q
    if (r == 0) break;
    p = q;
    q = r;
  }
  return ks;
}

Rat hj_value(const std::vector<int>& ks) {
  if (ks.empty()) throw ValidationError("hj_value of an empty string");
  Rat x(ks.back());
  for (std::size_t i = ks.size() - 1; i-- > 0;) {
    if (x == 0) throw ValidationError("hj_value hit a zero tail");
    x = Rat(ks[i]) - Rat(1) / x;
  }
  return x;
}

bool chain_contracts_to(const WeightedChain& c, const WeightedChain& target) {
  // DFS over contraction orders with memoization; the state space is tiny for
  // the chains this is used on (boundary + feather assemblies).
  std::set<WeightedChain> seen;
  std::vector<WeightedChain> stack{c};
  const std::size_t max_states = 200'000;
  while (!stack.empty()) {
    WeightedChain cur = stack.back();
    stack.pop_back();
    if (cur == target) return true;
    if (cur.size() <= target.size()) continue;
    if (!seen.insert(cur).second) continue;
    if (seen.size() > max_states)
      throw SearchLimitError("contraction search: state budget exhausted from " + chain_str(c));
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] == -1) stack.push_back(blow_down(cur, static_cast<int>(i)));
  }
  return false;
}

std::string chain_str(const WeightedChain& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace giz
