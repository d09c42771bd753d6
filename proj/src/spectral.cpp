#include "birkhoff/spectral.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "birkhoff/kahan.hpp"

namespace birkhoff {

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] >= 0.0))
            throw ValidationError("singular values must be nonnegative");
        if (i + 1 < values_.size() && values_[i] < values_[i + 1])
            throw ValidationError("singular values must be nonincreasing");
    }
}

SchattenExponent::SchattenExponent(double p) : p_(p) {
    if (!std::isfinite(p) || p < 1.0) {
        std::ostringstream msg;
        msg << "Schatten exponent must satisfy 1 <= p < infinity, got " << p;
        throw ValidationError(msg.str());
    }
}

namespace {

double squared_frobenius(const SquareMatrix& a) {
    KahanAccumulator acc;
    for (double v : a.entries()) acc.add(v * v);
    return acc.value();
}

constexpr int kMaxSweeps = 60;

}  // namespace

SingularSpectrum singular_values(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    // column-major copy: rotations act on column pairs
    std::vector<double> col(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col[j * n + i] = a(i, j);

    const double fro2 = squared_frobenius(a);
    if (fro2 == 0.0) return SingularSpectrum(std::vector<double>(n, 0.0));
    const double thresh = 1e-12 * fro2;

    int sweeps = 0;
    while (true) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double* ci = &col[i * n];
                double* cj = &col[j * n];
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    alpha += ci[k] * ci[k];
                    beta += cj[k] * cj[k];
                    gamma += ci[k] * cj[k];
                }
                if (std::abs(gamma) <= thresh) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vi = ci[k];
                    const double vj = cj[k];
                    ci[k] = c * vi - s * vj;
                    cj[k] = s * vi + c * vj;
                }
            }
        }
        if (!rotated) break;
        if (++sweeps >= kMaxSweeps)
            throw ConvergenceError(
                "jacobi svd: off-diagonal Gram entries still above threshold after 60 sweeps");
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        KahanAccumulator acc;
        for (std::size_t k = 0; k < n; ++k) acc.add(col[j * n + k] * col[j * n + k]);
        sv[j] = std::sqrt(acc.value());
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return SingularSpectrum(std::move(sv));
}

double schatten_norm(const SquareMatrix& a, SchattenExponent p) {
    const SingularSpectrum spectrum = singular_values(a);
    const double pv = p.value();
    KahanAccumulator acc;
    if (pv == 1.0) {
        for (double s : spectrum.values()) acc.add(s);
        return acc.value();
    }
    if (pv == 2.0) {
        for (double s : spectrum.values()) acc.add(s * s);
        return std::sqrt(acc.value());
    }
    for (double s : spectrum.values()) acc.add(std::pow(s, pv));
    return std::pow(acc.value(), 1.0 / pv);
}

double frobenius_norm(const SquareMatrix& a) {
    return std::sqrt(squared_frobenius(a));
}

double von_neumann_gap(const SquareMatrix& b, const SquareMatrix& c) {
    if (b.dim() != c.dim()) throw DimensionError("von Neumann gap: dimension mismatch");
    const std::size_t n = b.dim();
    const SingularSpectrum sb = singular_values(b);
    const SingularSpectrum sc = singular_values(c);
    KahanAccumulator pairing, tr;
    for (std::size_t i = 0; i < n; ++i) pairing.add(sb[i] * sc[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) tr.add(b(i, k) * c(k, i));
    return pairing.value() - std::abs(tr.value());
}

}  // namespace birkhoff
