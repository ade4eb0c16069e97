#pragma once

#include <stdexcept>
#include <string>

namespace qpacs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |alpha| outside the enforced convergence disk for the given q.
struct DivergenceError : Error {
    using Error::Error;
};

/// Fock-space truncation cap reached before the requested tolerance.
struct TruncationError : Error {
    using Error::Error;
};

/// Series term cap reached before the requested tolerance.
struct ToleranceError : Error {
    using Error::Error;
};

/// Requested expansion order beyond the supported cap.
struct ResourceError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

/// Truncated state lacks headroom for the operator word being applied.
struct HeadroomError : Error {
    using Error::Error;
};

/// Squeezing-coefficient denominator too close to zero to divide.
struct DegenerateDenominatorError : Error {
    DegenerateDenominatorError(const std::string& msg, double num, double den)
        : Error(msg), numerator(num), denominator(den) {}
    double numerator;
    double denominator;
};

/// Mandel parameter / correlation function undefined on the vacuum.
struct ZeroMeanError : Error {
    using Error::Error;
};

}  // namespace qpacs
