#include "giz/autgroup.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "giz/chain.hpp"
#include "giz/error.hpp"

namespace giz {
namespace {

int count_feathered_inner(const ExtendedDivisor& d) {
  int count = 0;
  for (int i = 3; i <= d.n() - 1; ++i)
    if (d.r(i) > 0) ++count;
  return count;
}

bool is_identity_fib(const BiratLetter& l) {
  return l.kind == BiratLetter::Kind::Fib && l.a == 1 && l.b == 1 && poly_is_zero(l.p);
}

// Modular inverse of e mod d for coprime 1 <= e < d, in [1, d-1].
int mod_inverse(int e, int d) {
  long long t = 0, new_t = 1, r = d, new_r = e;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ValidationError("d and e must be coprime");
  return static_cast<int>(((t % d) + d) % d);
}

}  // namespace

std::string graph_shape_str(GraphShape s) {
  switch (s) {
    case GraphShape::Loop: return "Loop";
    case GraphShape::TwoVertices: return "TwoVertices";
    case GraphShape::Unknown: return "Unknown";
  }
  return "Unknown";
}

ShapeReport fibration_graph_shape(const ExtendedDivisor& d) {
  validate(d);
  if (!condition_star(d))
    throw ValidationError(
        "the fibration graph is only computed under the star condition: "
        "r_2 = r_n = 0 and every inner component of *-type");

  ShapeReport out;
  SelfReversed q = q_self_reversed(d);
  if (!q.equal) {
    out.shape = GraphShape::TwoVertices;
    out.reason = "the invariant distinguishes the fibration from its reversal (" +
                 q.reason + ")";
    return out;
  }
  int feathered = count_feathered_inner(d);
  if (feathered <= 2) {
    out.shape = GraphShape::Loop;
    out.reason = "self-reversed invariant with " + std::to_string(feathered) +
                 " feathered inner component(s)";
    out.gamma = q.gamma;
  } else {
    out.shape = GraphShape::Unknown;
    out.reason = "self-reversed invariant with " + std::to_string(feathered) +
                 " feathered inner components falls outside the implemented criterion";
  }
  return out;
}

bool aut_generated_by_fibrations(const ExtendedDivisor& d) {
  ShapeReport s = fibration_graph_shape(d);
  switch (s.shape) {
    case GraphShape::TwoVertices:
      // Two distinct vertices: the amalgam J *_A J' is generated by the two
      // fibration stabilizers by construction.
      return true;
    case GraphShape::Loop: {
      // A loop adds a reversing generator; only the special boundary with
      // every inner weight -2 and tail length 3 absorbs it into the
      // fibrations.
      WeightedChain std_form = standardize(d.chain).chain;
      return std_form == WeightedChain{0, 0, -2, -2, -2};
    }
    case GraphShape::Unknown:
      break;
  }
  throw UndeterminedError(
      "cannot decide generation by fibrations: the fibration graph shape is "
      "unknown for this surface");
}

std::string amalgam_presentation(GraphShape s) {
  switch (s) {
    case GraphShape::Loop: return "A ⋆_{A∩J} J";
    case GraphShape::TwoVertices: return "J ⋆_A J^∨";
    case GraphShape::Unknown: break;
  }
  throw UndeterminedError("no amalgam presentation for an unknown graph shape");
}

BiratLetter rev_letter(const std::string& center) {
  if (center.empty()) throw ValidationError("reversion center must be named");
  BiratLetter l;
  l.kind = BiratLetter::Kind::Rev;
  l.center = center;
  return l;
}

BiratLetter fib_letter(const Rat& a, const Rat& b, const Poly& p) {
  if (a == 0 || b == 0)
    throw ValidationError("fibered map coefficients a and b must be nonzero");
  BiratLetter l;
  l.kind = BiratLetter::Kind::Fib;
  l.a = a;
  l.b = b;
  l.p = poly_normalize(p);
  return l;
}

BiratWord parse_birat_word(const std::string& text) {
  BiratWord out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 5 || token.back() != ')')
      throw ValidationError("malformed birational letter: " + token);
    std::string head = token.substr(0, 4);
    std::string body = token.substr(4, token.size() - 5);
    if (head == "Rev(") {
      out.push_back(rev_letter(body));
    } else if (head == "Fib(") {
      std::vector<std::string> args;
      std::string cur;
      for (char c : body) {
        if (c == ',') {
          args.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      args.push_back(cur);
      if (args.size() != 3)
        throw ValidationError("Fib letter needs exactly (a,b,P): " + token);
      out.push_back(fib_letter(parse_rat(args[0]), parse_rat(args[1]), parse_poly(args[2])));
    } else {
      throw ValidationError("unknown birational letter kind: " + token);
    }
  }
  return out;
}

std::string birat_word_str(const BiratWord& w) {
  std::string s;
  for (const BiratLetter& l : w) {
    if (!s.empty()) s += ' ';
    if (l.kind == BiratLetter::Kind::Rev) {
      s += "Rev(" + l.center + ")";
    } else {
      s += "Fib(" + rat_str(l.a) + "," + rat_str(l.b) + "," + poly_str(l.p) + ")";
    }
  }
  if (s.empty()) s = "(empty)";
  return s;
}

BiratWord reduce_birational_word(BiratWord w, bool all_weights_ge_minus2) {
  long fresh = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop identity fibered maps first.
    for (std::size_t i = 0; i < w.size();) {
      if (is_identity_fib(w[i])) {
        w.erase(w.begin() + i);
        changed = true;
      } else {
        ++i;
      }
    }
    // Apply the first matching pair rule, then rescan.
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      BiratLetter& x = w[i];
      BiratLetter& y = w[i + 1];
      if (x.kind == BiratLetter::Kind::Rev && y.kind == BiratLetter::Kind::Rev) {
        if (x.center == y.center) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          changed = true;
          break;
        }
        if (all_weights_ge_minus2) {
          // On such surfaces every center admits a reversion and the
          // composite of two is a reversion over a third, fresh center.
          BiratLetter composite = rev_letter("#" + std::to_string(++fresh));
          w.erase(w.begin() + i, w.begin() + i + 2);
          w.insert(w.begin() + i, composite);
          changed = true;
          break;
        }
      } else if (x.kind == BiratLetter::Kind::Fib && y.kind == BiratLetter::Kind::Fib) {
        // Apply x then y: composite (x,y) |-> (a2(a1 x + P1(y)) + P2(b1 y), b1 b2 y).
        Poly p = poly_add(poly_scale(y.a, x.p), poly_compose_scale(y.p, x.b));
        BiratLetter composite = fib_letter(x.a * y.a, x.b * y.b, p);
        w.erase(w.begin() + i, w.begin() + i + 2);
        w.insert(w.begin() + i, composite);
        changed = true;
        break;
      }
    }
  }
  return w;
}

ToricReport toric_report(int d, int e) {
  if (d < 1) throw ValidationError("toric parameter d must be >= 1");
  if (e < 0 || e >= d) throw ValidationError("toric parameter e must satisfy 0 <= e < d");
  if (std::gcd(d, e) != 1) throw ValidationError("d and e must be coprime");

  ToricReport out;
  out.d = d;
  out.e = e;
  if (d == 1) {
    out.e_reversed = 0;
    out.boundary = {0, 0, 0};
    out.shape = GraphShape::Loop;
    out.presentation = amalgam_presentation(out.shape);
    return out;
  }

  out.e_reversed = mod_inverse(e, d);
  out.boundary = {0, 0};
  for (int k : hj_expand(d, d - e)) out.boundary.push_back(-k);

  Feather f;
  f.component = static_cast<int>(out.boundary.size()) - 1;
  f.bridge = -1;
  std::vector<int> tail;
  for (int k : hj_expand(d, e)) tail.push_back(-k);
  f.tail.assign(tail.rbegin(), tail.rend());
  f.point = cstar(Rat(1), Rat(0));
  out.feather = f;

  out.shape = (out.e == out.e_reversed) ? GraphShape::Loop : GraphShape::TwoVertices;
  out.presentation = amalgam_presentation(out.shape);

  // The boundary, bridge and feather tail assemble into one linear chain
  // that must contract to the quadric boundary [0,0,0].
  WeightedChain assembled = out.boundary;
  assembled.push_back(-1);
  assembled.insert(assembled.end(), f.tail.begin(), f.tail.end());
  if (!chain_contracts_to(assembled, WeightedChain{0, 0, 0}))
    throw TheoryError("toric boundary and feather do not contract to the quadric");
  return out;
}

std::string toric_report_str(const ToricReport& r) {
  return "e' = " + std::to_string(r.e_reversed) + "; shape: " + graph_shape_str(r.shape) +
         "; Aut = " + r.presentation;
}

}  // namespace giz
