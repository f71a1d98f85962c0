#pragma once

#include <stdexcept>
#include <string>

namespace unicover {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The caller handed us something outside an operation's domain
// (degenerate simplex, non-refining fan, non-lattice slice, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(std::string reason, std::string message)
        : Error(message), reason_(std::move(reason)) {}
    explicit PreconditionError(const std::string& message)
        : PreconditionError("precondition", message) {}

    // Short machine-readable tag, e.g. "fan_not_refining".
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

// An existence statement that is supposed to hold by construction failed.
// Seeing one of these on valid input means there is a bug somewhere.
class GuaranteeViolation : public Error {
public:
    GuaranteeViolation(std::string kind, const std::string& message, std::string diagnostics)
        : Error(kind + ": " + message), kind_(std::move(kind)), diagnostics_(std::move(diagnostics)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string kind_;
    std::string diagnostics_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

}  // namespace unicover
