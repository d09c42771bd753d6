#include "birkhoff/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "birkhoff/assignment.hpp"
#include "birkhoff/kahan.hpp"
#include "birkhoff/rng.hpp"
#include "birkhoff/sampling.hpp"

namespace birkhoff {

const char* to_string(RadiusMethod m) noexcept {
    switch (m) {
        case RadiusMethod::closed_form_s2: return "closed_form_s2";
        case RadiusMethod::enumeration: return "enumeration";
        case RadiusMethod::sampled_lower_bound: return "sampled_lower_bound";
    }
    return "unknown";
}

namespace {

double squared_frobenius(const SquareMatrix& a) {
    KahanAccumulator acc;
    for (double v : a.entries()) acc.add(v * v);
    return acc.value();
}

double distance_to_permutation(const SquareMatrix& a, const std::vector<int>& sigma,
                               double p) {
    const std::size_t n = a.dim();
    SquareMatrix diff = a;
    for (std::size_t i = 0; i < n; ++i)
        diff(i, static_cast<std::size_t>(sigma[i])) -= 1.0;
    return schatten_norm(diff, SchattenExponent(p));
}

void require_enumerable(std::size_t n) {
    if (n > kEnumerationMaxDim) {
        std::ostringstream msg;
        msg << "exact enumeration limited to n <= " << kEnumerationMaxDim << ", got " << n
            << "; use the sampled lower bound instead";
        throw SizeLimitError(msg.str());
    }
}

}  // namespace

BoundingBallReport bounding_ball_radius_s2(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    const MinTraceResult mt = min_trace_hungarian(a);
    const double arg = squared_frobenius(a) + static_cast<double>(n) - 2.0 * mt.value;
    const double radius = std::sqrt(std::max(0.0, arg));
    // |A - P|^2 = |A|^2 + n - 2 tr(A P^T): the farthest P is the transposed argmin
    return BoundingBallReport{a, 2.0, radius, mt.argmin.inverse(),
                              RadiusMethod::closed_form_s2};
}

BoundingBallReport bounding_ball_radius_enum(const SquareMatrix& a, SchattenExponent p) {
    const std::size_t n = a.dim();
    require_enumerable(n);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_sigma;

    if (p.value() == 2.0) {
        const double base = squared_frobenius(a) + static_cast<double>(n);
        for_each_permutation(n, [&](const std::vector<int>& sigma) {
            KahanAccumulator acc;
            for (std::size_t i = 0; i < n; ++i)
                acc.add(a(i, static_cast<std::size_t>(sigma[i])));
            const double d2 = base - 2.0 * acc.value();
            if (d2 > best) {
                best = d2;
                best_sigma = sigma;
            }
        });
        return BoundingBallReport{a, 2.0, std::sqrt(std::max(0.0, best)),
                                  PermutationMatrix(std::move(best_sigma)),
                                  RadiusMethod::enumeration};
    }

    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        const double d = distance_to_permutation(a, sigma, p.value());
        if (d > best) {
            best = d;
            best_sigma = sigma;
        }
    });
    return BoundingBallReport{a, p.value(), best, PermutationMatrix(std::move(best_sigma)),
                              RadiusMethod::enumeration};
}

BoundingBallReport bounding_ball_radius_sampled(const SquareMatrix& a, SchattenExponent p,
                                                int samples, std::uint64_t seed) {
    if (samples < 1) throw ValidationError("sample count must be positive");
    const std::size_t n = a.dim();
    Xoshiro256PlusPlus rng(seed);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_sigma;
    for (int s = 0; s < samples; ++s) {
        const std::vector<int> sigma = random_permutation(n, rng);
        const double d = distance_to_permutation(a, sigma, p.value());
        if (d > best) {
            best = d;
            best_sigma = sigma;
        }
    }
    return BoundingBallReport{a, p.value(), best, PermutationMatrix(std::move(best_sigma)),
                              RadiusMethod::sampled_lower_bound};
}

std::pair<double, double> radius_bounds_s2(const DoublyStochasticMatrix& d) {
    const double f2 = squared_frobenius(d.matrix());
    const double n = static_cast<double>(d.dim());
    const double lo = std::sqrt(std::max(0.0, f2 + n - 2.0));
    const double hi = std::sqrt(f2 + n);
    return {lo, hi};
}

ChebyshevReport chebyshev_radius(std::size_t n, SchattenExponent p) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
    const double radius = std::pow(static_cast<double>(n - 1), 1.0 / p.value());
    return ChebyshevReport{n, p.value(), radius, jn(n).matrix()};
}

double alpha_line_norm(double alpha, std::size_t n, SchattenExponent p) {
    if (n < 2) throw DimensionError("alpha line norm needs n >= 2");
    const double pv = p.value();
    return std::pow(static_cast<double>(n - 1) + std::pow(std::abs(1.0 - alpha), pv),
                    1.0 / pv);
}

EquidistanceReport equidistance_check(const SquareMatrix& a, SchattenExponent p, double tol,
                                      int samples, std::uint64_t seed) {
    const std::size_t n = a.dim();
    std::vector<double> distances;
    bool exhaustive = true;
    if (n <= kEnumerationMaxDim) {
        for_each_permutation(n, [&](const std::vector<int>& sigma) {
            distances.push_back(distance_to_permutation(a, sigma, p.value()));
        });
    } else {
        exhaustive = false;
        if (samples < 1) throw ValidationError("sample count must be positive");
        Xoshiro256PlusPlus rng(seed);
        distances.reserve(static_cast<std::size_t>(samples));
        for (int s = 0; s < samples; ++s)
            distances.push_back(
                distance_to_permutation(a, random_permutation(n, rng), p.value()));
    }
    const auto [lo, hi] = std::minmax_element(distances.begin(), distances.end());
    const double max_dev = *hi - *lo;
    return EquidistanceReport{max_dev, std::move(distances), exhaustive, max_dev <= tol};
}

UniquenessProbeReport center_uniqueness_probe(std::size_t n, SchattenExponent p, int trials,
                                              std::uint64_t seed) {
    if (n > 6) throw SizeLimitError("uniqueness probe limited to n <= 6");
    if (n < 2) throw DimensionError("uniqueness probe needs n >= 2");
    if (trials < 1) throw ValidationError("trial count must be positive");

    const double threshold = std::pow(static_cast<double>(n - 1), 1.0 / p.value());
    const SquareMatrix j = jn(n).matrix();
    Xoshiro256PlusPlus rng(seed);

    int falsifiers = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        SquareMatrix a(n);
        if (t % 2 == 0) {
            // J_n plus a perturbation of exact Frobenius size delta in [1e-3, 1]
            SquareMatrix e(n);
            double norm2 = 0.0;
            do {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t jc = 0; jc < n; ++jc) e(i, jc) = rng.uniform(-1.0, 1.0);
                norm2 = squared_frobenius(e);
            } while (norm2 == 0.0);
            const double delta = std::pow(10.0, rng.uniform(-3.0, 0.0));
            a = j + (delta / std::sqrt(norm2)) * e;
        } else {
            // random doubly stochastic matrix, redrawn while too close to J_n
            for (int attempt = 0;; ++attempt) {
                const std::size_t k = 2 + rng.next_below(2 * n);
                const DoublyStochasticMatrix d =
                    (t % 4 == 1) ? sample_convex(n, k, rng.next())
                                 : sample_sinkhorn(n, rng.next());
                a = d.matrix();
                if (frobenius_norm(a - j) >= 1e-3) break;
                if (attempt > 100)
                    throw ConvergenceError("uniqueness probe: could not sample away from J_n");
            }
        }
        const double radius = (p.value() == 2.0)
                                  ? bounding_ball_radius_s2(a).radius
                                  : bounding_ball_radius_enum(a, p).radius;
        const double margin = radius - threshold;
        min_margin = std::min(min_margin, margin);
        if (!(margin > 0.0)) ++falsifiers;
    }
    return UniquenessProbeReport{n, p.value(), trials, falsifiers, min_margin, threshold};
}

}  // namespace birkhoff
