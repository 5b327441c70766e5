#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

// Thrown when an iterative numeric routine fails to reach its documented
// tolerance (power iteration, eigensolver residuals, truncation bounds).
// Invalid arguments and malformed inputs use std::invalid_argument instead.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cesaro
