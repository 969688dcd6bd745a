#pragma once

// Surface documents: the JSON interchange form of an extended divisor, and
// the Graphviz rendering of its dual graph.
//
// Document format (strict: unknown keys are rejected at every level):
//
//   {
//     "weights": [0, 0, -2, -2, -3],          // boundary zigzag [w_0..w_n]
//     "feathers": [                           // optional, default []
//       {
//         "component": 4,                     // attachment index, 2..n
//         "bridge": -1,                       // always -1, kept explicit
//         "tail": [-2, -3],                   // optional, default []
//         "point": {"r": "3/2", "theta": "1/4"},  // exact polar base point
//         "mother": 4                         // optional
//       }
//     ],
//     "smooth": true,                         // optional; must match the data
//     "condition_star": true                  // optional; must match the data
//   }
//
// Rationals travel as canonical strings ("p" or "p/q").  emit always writes
// the optional flags it computed, so emitted documents are self-describing
// and byte-deterministic.

#include <string>

#include "giz/extdiv.hpp"

namespace giz {

// Parse and structurally validate a document.  Throws ValidationError with
// a specific message on malformed JSON, unknown keys, bad types, or an
// inconsistent smooth/condition_star claim.
ExtendedDivisor parse_surface_document(const std::string& json_text);

// Canonical JSON form, 2-space indent, trailing newline.  Stable:
// emit(parse(emit(d))) == emit(d) byte for byte.
std::string emit_surface_document(const ExtendedDivisor& d);

// Graphviz "graph" source for the dual graph: one box per component labeled
// "C_i (w_i)", pendant paths for the feathers, feather attachment edges
// labeled by the base point.  Byte-deterministic.
std::string export_dot(const ExtendedDivisor& d);

}  // namespace giz
