#pragma once

#include <stdexcept>
#include <string>

namespace giz {

/*
 * Error taxonomy.
 *
 * ValidationError:  the input data is malformed or a documented precondition
 *                   is violated.  The caller can fix this.  The CLI maps it
 *                   to exit status 2.
 *
 * SearchLimitError: a bounded search (standardization, contraction, word
 *                   recovery) ran out of its depth or node budget before
 *                   reaching a conclusion.  Raising GIZCTL_MAX_DEPTH may help.
 *                   Also exit status 2.
 *
 * TheoryError:      an internal cross-check failed -- a structural fact that
 *                   holds for every valid surface turned out false at run
 *                   time.  This signals a bug (or deliberately inconsistent
 *                   input that slipped past validation), never a user mistake,
 *                   and is always worth a loud failure.
 *
 * UndeterminedError: the input is valid but falls outside the implemented
 *                   criteria (e.g. a fibration graph with three or more
 *                   feathered inner components), so the question genuinely
 *                   has no answer here.  The CLI maps it to exit status 3.
 */

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TheoryError : std::logic_error {
  using std::logic_error::logic_error;
};

struct UndeterminedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace giz
