#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exls {

/// Malformed or ill-typed input text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A value violates a structural invariant (divergence, closedness, degree, ...).
class InvariantError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different variable sets or coordinate systems.
class MismatchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation would need more t-truncation order than its input certifies.
class HeadroomError : public std::runtime_error {
public:
    HeadroomError(const std::string &msg, int required) : std::runtime_error(msg), required_(required) {}
    int required() const { return required_; }

private:
    int required_;
};

}  // namespace exls
