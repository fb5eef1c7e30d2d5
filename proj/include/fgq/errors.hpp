#pragma once

#include <stdexcept>
#include <string>

namespace fgq {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data: bad dimensions, out-of-range entries, size mismatches.
struct structural_error : error {
    using error::error;
};

/// A precondition of an operation was violated by the caller.
struct precondition_error : error {
    using error::error;
};

/// Input exceeds a hard resource bound (enumeration order, automorphism order).
struct capacity_error : error {
    using error::error;
};

/// A table expected to be a group fails associativity or lacks a neutral.
struct not_group_error : error {
    using error::error;
};

/// A table expected to satisfy the two defining four-variable identities does not.
/// Carries a human-readable witness of the first failure found.
struct not_fg_error : error {
    using error::error;
};

/// A partition handed to quotient() is not a congruence; message names a witness pair.
struct congruence_error : error {
    using error::error;
};

/// A (group, f, g, e) tuple violates one of the arithmetic-form axioms.
struct invalid_form_error : error {
    using error::error;
};

/// A generalized-module record violates one of its invariants.
struct invalid_module_error : error {
    using error::error;
};

/// A certified reconstruction failed where theory says it cannot; indicates a bug.
struct internal_error : error {
    using error::error;
};

/// Unknown predicate or option names in a request.
struct config_error : error {
    using error::error;
};

/// Text input could not be parsed; carries 1-based line and column.
struct parse_error : error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& what_)
        : error("parse error at " + std::to_string(line_) + ":" + std::to_string(column_) +
                ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace fgq
