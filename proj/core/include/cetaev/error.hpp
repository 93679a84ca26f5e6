#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cetaev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line number (0 when unknown).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    /// Message without the line prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// Potential or kinetic data that violates a structural requirement
/// (non-critical origin, non-SPD kinetic matrix, ...).
class ModelError : public Error {
public:
    using Error::Error;
};

/// Numerical integration failure (non-finite state, exhausted step budget).
class IntegrationError : public Error {
public:
    using Error::Error;
};

}  // namespace cetaev
