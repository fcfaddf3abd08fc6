#ifndef ZETALAB_ERRORS_HPP
#define ZETALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetalab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation at a pole of gamma or zeta.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Input outside the supported domain (parity class, argument bound, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A truncated sum or quadrature failed to meet its tolerance.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// An exact integer result would exceed the representable range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

} // namespace zetalab

#endif
