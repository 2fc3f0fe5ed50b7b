// errors.hpp — exception types shared across modules

#pragma once

#include <stdexcept>
#include <string>

namespace mqed {

// malformed input data (tabulated files, pulse series); carries a line number when known
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_number(line) {}
    long line_number;
};

// evaluation outside a provider's validity interval
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// unregistered point / emitter index
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// physically inconsistent input (negative diagonal Im G, Cauchy-Schwarz violation, ...)
struct DataConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid run configuration
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// propagation step size too large for the requested accuracy
struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mqed
