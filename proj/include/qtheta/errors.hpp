#pragma once

#include <stdexcept>
#include <string>

namespace qtheta {

// Base class for every error thrown by the engine.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values from different computation contexts were mixed (their
// exponent denominators differ, or an exponent does not lie on the grid).
struct context_error : error {
    using error::error;
};

// A coefficient was requested at or beyond a series' validity order.
// Beyond the order the value is unknown, which is different from zero.
struct order_error : error {
    using error::error;
};

// A zeta-exponent failed a required divisibility (z -> z/n substitution).
struct divisibility_error : error {
    using error::error;
};

// A caller broke a precondition (bad dimension, index out of range, ...).
struct usage_error : error {
    using error::error;
};

// An exactness assertion failed (e.g. a division that must be exact was
// not). Indicates a bug, not bad input.
struct integrity_error : error {
    using error::error;
};

} // namespace qtheta
