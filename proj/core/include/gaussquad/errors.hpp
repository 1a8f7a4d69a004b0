#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussquad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero and similar exact-arithmetic failures.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a function (ln of a non-positive value, n out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A formal series was asked for more coefficients than it carries.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Modular inverse requested for polynomials with a common root.
class SharedRootError : public Error {
public:
    using Error::Error;
};

class DuplicateNodeError : public Error {
public:
    using Error::Error;
};

/// Root isolation or polishing failed; carries the offending bracket as decimal strings.
class RootIsolationError : public Error {
public:
    RootIsolationError(const std::string& what, std::string lo, std::string hi)
        : Error(what + " in [" + lo + ", " + hi + "]"), lo_(std::move(lo)), hi_(std::move(hi)) {}
    explicit RootIsolationError(const std::string& what) : Error(what) {}

    const std::string& bracket_lo() const noexcept { return lo_; }
    const std::string& bracket_hi() const noexcept { return hi_; }

private:
    std::string lo_;
    std::string hi_;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An integrand threw while being evaluated at a rule node.
class IntegrandError : public Error {
public:
    IntegrandError(std::size_t node_index, const std::string& what)
        : Error("integrand failed at node " + std::to_string(node_index) + ": " + what),
          node_index_(node_index) {}

    std::size_t node_index() const noexcept { return node_index_; }

private:
    std::size_t node_index_;
};

} // namespace gaussquad
