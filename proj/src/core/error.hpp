#pragma once

#include <stdexcept>
#include <string>

namespace folham {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: expressions, spec files, unknown identifiers.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its domain (e.g. a non-foliated argument,
// a structure that is not transversal).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A verified mathematical guarantee did not hold. Seeing one means the
// implementation is wrong, not the input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace folham
