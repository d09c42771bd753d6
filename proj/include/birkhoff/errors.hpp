#pragma once

#include <stdexcept>
#include <string>

namespace birkhoff {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or unusable matrix dimensions (including ragged input).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input fails a domain contract: non-finite entries, row/column sums off,
/// not of central form, commutation failure, bad permutation array.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An iteration failed to converge within its cap (Jacobi sweeps, Sinkhorn).
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// The requested exact computation is guarded against factorial blowup.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// No perfect matching on the support graph during peeling.
class MatchingError : public Error {
public:
    using Error::Error;
};

}  // namespace birkhoff
