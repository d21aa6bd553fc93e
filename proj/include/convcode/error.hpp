#pragma once

#include <stdexcept>
#include <string>

namespace convcode {

/// Malformed or out-of-contract input (bad field, shape mismatch, non-basic
/// matrix where a basic one is required, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured size or work budget would be exceeded.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse failure with a source position. Line and column are 1-based.
struct ParseError : InputError {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace convcode
