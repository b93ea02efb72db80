#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

// Malformed user input: PD text, architecture JSON, bad diagram structure.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested Reidemeister move is illegal for the mode or has no valid site.
struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (oracle disagreement, broken invariant).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace sgt
