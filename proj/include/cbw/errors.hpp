#pragma once

#include <stdexcept>
#include <string>

namespace cbw {

/// Invalid argument to a numeric operation (non-finite phase, out-of-range
/// count, nonpositive wavelength, ...).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Curve measurement failure: no peak, missing half-max crossings, or
/// degenerate (constant / all-zero) data.
class metrology_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Netlist syntax or validation failure; carries the 1-based source line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace cbw
