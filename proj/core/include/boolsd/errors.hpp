#ifndef BOOLSD_ERRORS_HPP
#define BOOLSD_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace boolsd {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parameter outside a family's validity range, malformed input, etc.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Adaptive integration ran out of subdivisions. Carries the partial result.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& msg, std::complex<double> partial, double err_estimate)
        : Error(msg), partial_value(partial), error_estimate(err_estimate) {}
    std::complex<double> partial_value;
    double error_estimate;
};

/// A boundary-limit ladder failed to settle (oscillation, no trend).
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Triplet violates condition (T): negative Gaussian part, Levy mass at 0,
/// or non-integrable (1 ^ x^2) tail.
class InvalidTripletError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Declared total mass disagrees with atoms + integrated density.
class MassMismatchError : public Error {
public:
    MassMismatchError(const std::string& msg, double declared, double computed)
        : Error(msg), declared_mass(declared), computed_mass(computed) {}
    double declared_mass;
    double computed_mass;
};

/// One probe point where a decomposition cofactor left the K-range.
struct KRangeViolation {
    std::complex<double> z;
    double im_k;  // positive value that should have been <= 0
};

/// Thrown by sd_decompose when the cofactor fails the K-range check.
/// The evidence doubles as an independent "not selfdecomposable" witness.
class NotSelfdecomposableError : public Error {
public:
    NotSelfdecomposableError(const std::string& msg, std::vector<KRangeViolation> ev)
        : Error(msg), evidence(std::move(ev)) {}
    std::vector<KRangeViolation> evidence;
};

}  // namespace boolsd

#endif
