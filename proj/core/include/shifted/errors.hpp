#pragma once

#include <stdexcept>
#include <string>

namespace shifted {

// A mathematical validation failure: the input is well-formed but does not
// satisfy the contract (not balanced, not reduced, not in the image set, ...).
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A malformed input (unparsable shape, letter out of range, bad flag combo).
// The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shifted
