#pragma once

#include <stdexcept>
#include <string>

namespace hdecomp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (e.g. chi(H) < 3).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured search cap or budget was exceeded.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `offset()` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace hdecomp
