#pragma once

#include <stdexcept>
#include <string>

namespace pincurve {

// All library errors derive from this; what() names the violated invariant.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different fields / ambient spaces.
struct descriptor_mismatch : error {
    using error::error;
};

// Enumeration would exceed the configured guard limit.
struct guard_exceeded : error {
    using error::error;
};

// Mathematically out of scope (infinite enumeration, char-p Ga stability, ...).
struct unsupported : error {
    using error::error;
};

// A set of generators that was required to be additively/multiplicatively
// closed is not.
struct not_closed : error {
    using error::error;
};

// Bad user-supplied parameters (invalid semigroup tuple, q not a prime
// power, subfield not intermediate, ...).
struct parameter_error : error {
    using error::error;
};

// Default element-count bound for explicit enumerations.  Every enumeration
// entry point takes the limit as an argument so callers can raise it; the
// CLI additionally honors PINCHCURVE_GUARD_LIMIT.
inline constexpr std::size_t default_guard_limit = 4096;

}  // namespace pincurve
