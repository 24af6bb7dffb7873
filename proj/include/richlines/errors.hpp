#pragma once

#include <stdexcept>
#include <string>

namespace richlines {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition or argument contract was violated ("empty set",
/// "non-invertible map", "sizes differ", ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A resource cap was exceeded ("support blowup"). Distinct from
/// InvalidArgument so callers can map it to a different exit status.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Carries the source name and 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

}  // namespace richlines
