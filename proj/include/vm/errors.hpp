#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument: unknown vertex id, violated precondition, malformed input value.
class DomainError : public Error {
public:
    using Error::Error;
};

// Input is structurally fine but exceeds a configured size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Malformed textual input (graph6, JSON). Carries the byte offset of the
// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

// A guaranteed postcondition failed; indicates a bug, not a user error.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace vm
