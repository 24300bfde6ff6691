#pragma once

#include <stdexcept>
#include <string>

namespace orthocol {

/// Raised when an operation's input violates a documented precondition
/// (a non-prime modulus, a colouring that is not perfect, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when serialized input cannot be decoded into a valid value.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orthocol
