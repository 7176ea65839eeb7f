#pragma once

#include <stdexcept>
#include <string>

namespace homprelie {

/// Malformed input: unparsable files, bad indices, shape mismatches.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A checked mathematical property failed (not an axiom, not central,
/// not perfect, search exhausted, ...). Carries a human-readable witness.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal invariant that should hold by construction was violated.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace homprelie
