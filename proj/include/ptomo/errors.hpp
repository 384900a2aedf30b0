// errors.hpp — exception taxonomy: input/contract violations vs numerical guards

#pragma once

#include <stdexcept>
#include <string>

namespace ptomo {

// Base for everything this library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid inputs: bad parameters, incompatible kinds, unsupported requests.
struct domain_error : error {
    using error::error;
};

// Grid cannot represent the requested object (coverage/resolution/alignment).
struct grid_error : domain_error {
    using domain_error::domain_error;
};

// Numerical guard tripped while computing (not fixable by the same inputs).
struct numerical_error : error {
    using error::error;
};

// Left-edge decay required by the causal antiderivative was violated.
struct boundary_decay_error : numerical_error {
    double boundary_magnitude;
    boundary_decay_error(const std::string& msg, double mag)
        : numerical_error(msg), boundary_magnitude(mag) {}
};

// Reconstruction quality gate (normalization / completion confidence) failed.
struct reconstruction_error : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace ptomo
