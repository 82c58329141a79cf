#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace clawcycle {

// Base of every error the library throws. The CLI maps all of these to exit 2,
// except TheoremViolation which is reported as a failed check.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MalformedAutomorphism : public Error {
public:
    using Error::Error;
};

class InsufficientCardinality : public Error {
public:
    InsufficientCardinality(std::size_t have, std::size_t required)
        : Error("insufficient cardinality: set has " + std::to_string(have) +
                " vertices, at least " + std::to_string(required) + " required"),
          have_(have), required_(required) {}

    std::size_t have() const noexcept { return have_; }
    std::size_t required() const noexcept { return required_; }

private:
    std::size_t have_;
    std::size_t required_;
};

/// Raised when a set that satisfies the cardinality bound has neither an
/// induced claw nor an induced 8-cycle. Must never fire.
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(std::string set_hex)
        : Error("theorem violation: no witness for set " + set_hex), set_hex_(std::move(set_hex)) {}

    const std::string& set_hex() const noexcept { return set_hex_; }

private:
    std::string set_hex_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace clawcycle
