#pragma once

// Structure of the automorphism group.
//
// The group Aut(V) of a surface under the star condition acts on a graph
// whose vertices are the extended divisors of the two standard fibrations
// (the given one and its reversal).  Only two shapes occur for the surfaces
// this library decides:
//
//  * Loop        -- the invariant is self-reversed (Q == Q-reversed), the two
//                   fibrations are isomorphic, and Aut(V) is the amalgam
//                   A *_{A cap J} J over a single vertex with a loop edge.
//  * TwoVertices -- the invariant distinguishes the fibrations and Aut(V)
//                   is the amalgam J *_A J' of the two vertex stabilizers.
//
// With three or more feathered inner components the criterion implemented
// here does not apply and the shape is reported Unknown.
//
// The module also covers the toric surfaces V_{d,e}: their boundary zigzag
// and single feather are produced from the continued-fraction data of d/e,
// and the graph shape is Loop exactly when e^2 = 1 (mod d).
//
// Finally, words in the birational decomposition Aut(V) = <reversions,
// fibered maps> can be reduced to a normal form by the local rules
// implemented in reduce_birational_word.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "giz/configinv.hpp"
#include "giz/extdiv.hpp"
#include "giz/rational.hpp"

namespace giz {

enum class GraphShape { Loop, TwoVertices, Unknown };

std::string graph_shape_str(GraphShape s);

struct ShapeReport {
  GraphShape shape = GraphShape::Unknown;
  std::string reason;                 // why, in one sentence
  std::map<int, CStarPoint> gamma;    // reversing scalings, Loop shape only
};

// Decide the shape of the fibration graph for a divisor satisfying the star
// condition.  Self-reversed invariant with at most two feathered inner
// components gives Loop; a non-self-reversed invariant gives TwoVertices;
// three or more feathered inner components with a self-reversed invariant
// is Unknown.
ShapeReport fibration_graph_shape(const ExtendedDivisor& d);

// Whether Aut(V) is generated by the automorphisms of the two fibrations.
// True for the TwoVertices shape; for the Loop shape true exactly for the
// one special boundary [0, 0, -2, -2, -2].  Throws UndeterminedError when
// the shape is Unknown.
bool aut_generated_by_fibrations(const ExtendedDivisor& d);

// Amalgam presentation attached to the graph shape.  Throws
// UndeterminedError for Unknown.
std::string amalgam_presentation(GraphShape s);

/*
 * Birational words.  A letter is either a reversion Rev(center) -- an
 * involution exchanging the fibration with its reversal over the named
 * center -- or a fibered triangular map Fib(a, b, P) acting by
 * (x, y) |-> (a x + P(y), b y).  A word lists letters left to right in
 * application order.
 */
struct BiratLetter {
  enum class Kind { Rev, Fib } kind = Kind::Fib;
  std::string center;  // Rev only
  Rat a{1}, b{1};      // Fib only
  Poly p;              // Fib only

  bool operator==(const BiratLetter&) const = default;
};

using BiratWord = std::vector<BiratLetter>;

BiratLetter rev_letter(const std::string& center);
BiratLetter fib_letter(const Rat& a, const Rat& b, const Poly& p);

// Parse "Rev(c1) Fib(2,3,y) Fib(5,7,y^2)" -- whitespace-separated letters.
BiratWord parse_birat_word(const std::string& text);
std::string birat_word_str(const BiratWord& w);

// Reduce to a fixpoint of the local rules:
//  - Rev(c) Rev(c)          -> (drop): a reversion is an involution;
//  - Rev(c1) Rev(c2), c1 != c2, when every inner weight is >= -2
//                           -> Rev(c*) with a fresh center (such surfaces
//                              have reversions over every center, and two of
//                              them compose into a third);
//  - Fib Fib                -> their composite triangular map;
//  - Fib(1, 1, 0)           -> (drop).
// The result is a fixpoint (reducing again changes nothing).  When
// all_weights_ge_minus2 is false, distinct-center reversion pairs are kept,
// preserving reversion parity.
BiratWord reduce_birational_word(BiratWord w, bool all_weights_ge_minus2);

/*
 * Toric surfaces V_{d,e}, 0 <= e < d, gcd(d, e) = 1.  Their boundary and
 * single feather are computed from the Hirzebruch--Jung expansions of
 * d/(d-e) and d/e; the reversed surface is V_{d,e'} with e' the inverse of
 * e modulo d, so the fibration graph is a Loop exactly when e = e'.
 */
struct ToricReport {
  int d = 1, e = 0;
  int e_reversed = 0;                // e' = e^{-1} mod d
  WeightedChain boundary;            // [0, 0, ...] standard zigzag
  std::optional<Feather> feather;    // absent exactly for d = 1
  GraphShape shape = GraphShape::Unknown;
  std::string presentation;
};

ToricReport toric_report(int d, int e);

std::string toric_report_str(const ToricReport& r);

}  // namespace giz
