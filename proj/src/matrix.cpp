#include "birkhoff/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "birkhoff/kahan.hpp"

namespace birkhoff {

namespace {

void require_dim(std::size_t n) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
}

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw DimensionError(msg.str());
    }
}

void require_finite(std::span<const double> entries) {
    for (double v : entries) {
        if (!std::isfinite(v)) throw ValidationError("matrix entries must be finite");
    }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), entries_(n * n, fill) {
    require_dim(n);
    if (!std::isfinite(fill)) throw ValidationError("matrix entries must be finite");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    require_dim(n);
    if (entries_.size() != n * n) {
        std::ostringstream msg;
        msg << "entry array has " << entries_.size() << " values, expected " << n * n;
        throw DimensionError(msg.str());
    }
    require_finite(entries_);
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    require_dim(n);
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            std::ostringstream msg;
            msg << "ragged input: row " << i << " has " << rows[i].size()
                << " values, expected " << n;
            throw DimensionError(msg.str());
        }
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return SquareMatrix(n, std::move(entries));
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "matrix addition");
    SquareMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "matrix subtraction");
    SquareMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

SquareMatrix operator*(double s, const SquareMatrix& a) {
    SquareMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = s * a(i, j);
    return out;
}

SquareMatrix matrix_product(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

SquareMatrix transpose(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = a(i, j);
    return out;
}

double trace(const SquareMatrix& a) {
    KahanAccumulator acc;
    for (std::size_t i = 0; i < a.dim(); ++i) acc.add(a(i, i));
    return acc.value();
}

double frobenius_inner(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "frobenius inner product");
    KahanAccumulator acc;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) acc.add(ea[k] * eb[k]);
    return acc.value();
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "matrix comparison");
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k)
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    return worst;
}

PermutationMatrix::PermutationMatrix(std::vector<int> sigma) : sigma_(std::move(sigma)) {
    const std::size_t n = sigma_.size();
    require_dim(n);
    std::vector<char> seen(n, 0);
    for (int v : sigma_) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw ValidationError("sigma is not a bijection on {0,...,n-1}");
        seen[v] = 1;
    }
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
    require_dim(n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    return PermutationMatrix(std::move(sigma));
}

PermutationMatrix PermutationMatrix::inverse() const {
    std::vector<int> inv(sigma_.size());
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        inv[static_cast<std::size_t>(sigma_[i])] = static_cast<int>(i);
    return PermutationMatrix(std::move(inv));
}

SquareMatrix PermutationMatrix::to_dense() const {
    SquareMatrix out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out(i, static_cast<std::size_t>(sigma_[i])) = 1.0;
    return out;
}

PermutationMatrix permutation_product(const PermutationMatrix& p, const PermutationMatrix& q) {
    if (p.dim() != q.dim()) throw DimensionError("permutation product: dimension mismatch");
    std::vector<int> sigma(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        sigma[i] = q.image(static_cast<std::size_t>(p.image(i)));
    return PermutationMatrix(std::move(sigma));
}

DoublyStochasticMatrix make_doubly_stochastic(SquareMatrix m, double tol) {
    if (!(tol >= 0.0)) throw ValidationError("tolerance must be nonnegative");
    const std::size_t n = m.dim();

    double worst_neg = 0.0;
    std::size_t neg_i = 0, neg_j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < worst_neg) {
                worst_neg = m(i, j);
                neg_i = i;
                neg_j = j;
            }
        }
    }
    if (worst_neg < -tol) {
        std::ostringstream msg;
        msg << "entry (" << neg_i << "," << neg_j << ") = " << worst_neg
            << " is below -tol = " << -tol;
        throw ValidationError(msg.str());
    }

    bool clamped = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v != 0.0 && std::abs(v) <= tol) {
                m(i, j) = 0.0;
                clamped = true;
            }
        }
    }

    double worst_dev = 0.0;
    bool worst_is_row = true;
    std::size_t worst_idx = 0;
    double worst_sum = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        KahanAccumulator row, col;
        for (std::size_t j = 0; j < n; ++j) {
            row.add(m(i, j));
            col.add(m(j, i));
        }
        const double rdev = std::abs(row.value() - 1.0);
        const double cdev = std::abs(col.value() - 1.0);
        if (rdev > worst_dev) {
            worst_dev = rdev;
            worst_is_row = true;
            worst_idx = i;
            worst_sum = row.value();
        }
        if (cdev > worst_dev) {
            worst_dev = cdev;
            worst_is_row = false;
            worst_idx = i;
            worst_sum = col.value();
        }
    }
    if (worst_dev > tol) {
        std::ostringstream msg;
        msg << (worst_is_row ? "row " : "column ") << worst_idx << " sums to " << worst_sum
            << ", deviation " << worst_dev << " exceeds tol = " << tol;
        throw ValidationError(msg.str());
    }

    return DoublyStochasticMatrix(std::move(m), tol, clamped);
}

DoublyStochasticMatrix jn(std::size_t n) {
    require_dim(n);
    return make_doubly_stochastic(SquareMatrix(n, 1.0 / static_cast<double>(n)));
}

DoublyStochasticMatrix to_doubly_stochastic(const PermutationMatrix& p) {
    return make_doubly_stochastic(p.to_dense(), 0.0);
}

CentralForm central_form_decompose(const SquareMatrix& a, double tol) {
    const std::size_t n = a.dim();
    if (n < 2) throw DimensionError("central form decomposition needs n >= 2");

    KahanAccumulator diag_acc, off_acc;
    double diag_min = a(0, 0), diag_max = a(0, 0);
    double off_min = a(0, 1), off_max = a(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = a(i, j);
            if (i == j) {
                diag_acc.add(v);
                diag_min = std::min(diag_min, v);
                diag_max = std::max(diag_max, v);
            } else {
                off_acc.add(v);
                off_min = std::min(off_min, v);
                off_max = std::max(off_max, v);
            }
        }
    }
    if (diag_max - diag_min > tol || off_max - off_min > tol) {
        std::ostringstream msg;
        msg << "not of central form: diagonal spread " << (diag_max - diag_min)
            << ", off-diagonal spread " << (off_max - off_min) << " (tol = " << tol << ")";
        throw ValidationError(msg.str());
    }

    // generators of the symmetric group: the (0 1) transposition and the n-cycle
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>((i + 1) % n);
    for (const auto& sigma : {swap01, cycle}) {
        const SquareMatrix p = PermutationMatrix(sigma).to_dense();
        const double dev = max_abs_diff(matrix_product(a, p), matrix_product(p, a));
        if (dev > tol) {
            std::ostringstream msg;
            msg << "commutation failure: max |AP - PA| = " << dev << " exceeds tol = " << tol;
            throw ValidationError(msg.str());
        }
    }

    const double diag_mean = diag_acc.value() / static_cast<double>(n);
    const double off_mean = off_acc.value() / static_cast<double>(n * n - n);
    return CentralForm{diag_mean - off_mean, static_cast<double>(n) * off_mean};
}

}  // namespace birkhoff
