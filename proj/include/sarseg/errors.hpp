// Error taxonomy; the CLI maps each category to a distinct exit code.
#pragma once

#include <stdexcept>

namespace sarseg {

/// Bad configuration file, parameter out of its documented range, or a
/// violated operation contract. CLI exit code 1.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside a solver (non-finite iterate). CLI exit code 2.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File missing, unreadable, or malformed image data. CLI exit code 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sarseg
