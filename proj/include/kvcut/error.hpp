#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kvcut {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied an invalid graph, set, or parameter.
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed instance text; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Instance exceeds the configured limit of an exact (exponential) routine.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A built structure violates one of its own invariants.
class ConstructionError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace kvcut
