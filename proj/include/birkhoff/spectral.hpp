#pragma once

#include <cstddef>
#include <vector>

#include "birkhoff/matrix.hpp"

namespace birkhoff {

/// Singular values of a square matrix, nonincreasing and nonnegative.
class SingularSpectrum {
public:
    explicit SingularSpectrum(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

/// Exponent of a Schatten p-norm. Finite p >= 1 only; the operator-norm
/// limit p = infinity is out of scope here.
class SchattenExponent {
public:
    explicit SchattenExponent(double p);
    double value() const noexcept { return p_; }

private:
    double p_;
};

/// One-sided Jacobi singular values (cyclic sweeps, no external solver).
/// Converged when every off-diagonal Gram entry falls below 1e-12 * |A|_F^2;
/// throws ConvergenceError past 60 sweeps.
SingularSpectrum singular_values(const SquareMatrix& a);

/// (sum_i sigma_i^p)^(1/p). p = 1 and p = 2 take exact fast paths; both
/// still go through the singular spectrum.
double schatten_norm(const SquareMatrix& a, SchattenExponent p);

/// Entrywise sqrt(sum a_ij^2), computed without any SVD.
double frobenius_norm(const SquareMatrix& a);

/// Slack of von Neumann's trace inequality:
/// sum_i sigma_i(B) sigma_i(C) - |tr(BC)|, nonnegative up to round-off.
double von_neumann_gap(const SquareMatrix& b, const SquareMatrix& c);

}  // namespace birkhoff
