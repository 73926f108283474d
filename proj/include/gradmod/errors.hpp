#pragma once

#include <stdexcept>
#include <string>

namespace gradmod {

// Error categories aligned with the CLI exit codes (see README):
//   ParseError -> 2, ValidationError -> 3, ComputationError -> 4.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result could not be certified at the current truncation cap. The guarded
// driver catches this and retries with a larger cap before giving up.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gradmod
