#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "birkhoff/errors.hpp"

namespace birkhoff {

/// Default absolute tolerance for doubly stochastic validation. Row and
/// column sums are compensated, so accumulated error stays far below this
/// at the dimensions this library targets.
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense n x n real matrix, row-major, entries finite by construction.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n, double fill = 0.0);
    SquareMatrix(std::size_t n, std::vector<double> entries);

    static SquareMatrix identity(std::size_t n);
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t dim() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return entries_[i * n_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept {
        return entries_[i * n_ + j];
    }

    std::span<const double> entries() const noexcept { return entries_; }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(double s, const SquareMatrix& a);

SquareMatrix matrix_product(const SquareMatrix& a, const SquareMatrix& b);
inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    return matrix_product(a, b);
}

SquareMatrix transpose(const SquareMatrix& a);
double trace(const SquareMatrix& a);

/// <A, B> = tr(A B^T) = sum_ij a_ij b_ij over the reals.
double frobenius_inner(const SquareMatrix& a, const SquareMatrix& b);

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

/// Permutation matrix stored as its permutation vector: sigma[i] is the
/// column holding the single 1 of row i. 0-indexed everywhere, including
/// file formats and CLI output.
class PermutationMatrix {
public:
    explicit PermutationMatrix(std::vector<int> sigma);

    static PermutationMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return sigma_.size(); }
    const std::vector<int>& sigma() const noexcept { return sigma_; }
    int image(std::size_t row) const noexcept { return sigma_[row]; }

    PermutationMatrix inverse() const;
    SquareMatrix to_dense() const;

    bool operator==(const PermutationMatrix& other) const noexcept {
        return sigma_ == other.sigma_;
    }

private:
    std::vector<int> sigma_;
};

/// Composition matching the dense product: (P*Q).to_dense() == P.to_dense()*Q.to_dense().
PermutationMatrix permutation_product(const PermutationMatrix& p, const PermutationMatrix& q);
inline PermutationMatrix operator*(const PermutationMatrix& p, const PermutationMatrix& q) {
    return permutation_product(p, q);
}

/// Validated element of the doubly stochastic polytope. The factory below is
/// the only construction path; the value is immutable afterwards.
class DoublyStochasticMatrix {
public:
    const SquareMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    double tol() const noexcept { return tol_; }
    /// True when construction rounded near-zero entries to exactly 0.
    bool clamped() const noexcept { return clamped_; }

private:
    friend DoublyStochasticMatrix make_doubly_stochastic(SquareMatrix m, double tol);
    DoublyStochasticMatrix(SquareMatrix m, double tol, bool clamped)
        : m_(std::move(m)), tol_(tol), clamped_(clamped) {}

    SquareMatrix m_;
    double tol_;
    bool clamped_;
};

/// Validates nonnegativity and unit row/column sums within `tol`. Entries
/// within `tol` of 0 are set to exactly 0 so support-based algorithms see a
/// clean sparsity pattern. Throws ValidationError with the worst offender.
DoublyStochasticMatrix make_doubly_stochastic(SquareMatrix m, double tol = kDefaultTolerance);

/// The matrix with every entry 1/n: barycenter of the polytope.
DoublyStochasticMatrix jn(std::size_t n);

DoublyStochasticMatrix to_doubly_stochastic(const PermutationMatrix& p);

/// Coefficients of A = a*I + b*J, the general form of a matrix commuting
/// with every permutation matrix.
struct CentralForm {
    double a;
    double b;
};

/// Splits A into a*I + b*J when all diagonal entries agree within `tol` and
/// all off-diagonal entries agree within `tol` (class means are used), and
/// verifies commutation with the (0 1) transposition and the n-cycle.
CentralForm central_form_decompose(const SquareMatrix& a, double tol = kDefaultTolerance);

/// Calls f(sigma) for every permutation of {0,...,n-1} in lexicographic
/// order. Callers guard n themselves; 8! is the intended ceiling.
template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    const auto& view = sigma;
    do {
        f(view);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace birkhoff
