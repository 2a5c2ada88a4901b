#pragma once

#include <stdexcept>
#include <string>

namespace rph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something that violates a precondition.
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed text in a file format; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A computation would exceed a configured resource budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Transport failure; the operation may succeed if retried.
class NetworkError : public Error {
public:
    using Error::Error;
};

/// Remote payload arrived but failed sanity checks.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace rph
