#pragma once

#include <stdexcept>
#include <string>

namespace rescuesim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file: missing field, wrong type, unknown enum value.
struct SchemaError : Error {
    using Error::Error;
};

// Structurally valid input that breaks a documented invariant.
struct InvariantError : Error {
    using Error::Error;
};

// Filesystem problems (missing file, unwritable path).
struct IoError : Error {
    using Error::Error;
};

// Simulation-level failure (non-finite force, inconsistent state).
struct SimError : Error {
    using Error::Error;
};

} // namespace rescuesim
