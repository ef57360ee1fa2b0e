#ifndef ISOCOLLOC_ERRORS_HPP
#define ISOCOLLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isocolloc {

/// Invalid user input: bad knot vector, unsupported degree, mismatched sizes.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure during a solve (singular matrix, vanishing Jacobian).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad study / CLI configuration (maps to process exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace isocolloc

#endif
