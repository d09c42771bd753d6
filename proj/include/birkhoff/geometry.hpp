#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "birkhoff/matrix.hpp"
#include "birkhoff/spectral.hpp"

namespace birkhoff {

/// Exact enumeration ceiling for radius/equidistance scans: 8! permutations.
inline constexpr std::size_t kEnumerationMaxDim = 8;

enum class RadiusMethod { closed_form_s2, enumeration, sampled_lower_bound };
const char* to_string(RadiusMethod m) noexcept;

/// Minimal radius of a ball centered at `center` containing the whole
/// doubly stochastic polytope, plus a farthest permutation. With method
/// sampled_lower_bound the radius is only a lower bound on the true value.
struct BoundingBallReport {
    SquareMatrix center;
    double p;
    double radius;
    PermutationMatrix witness;
    RadiusMethod method;
};

struct ChebyshevReport {
    std::size_t n;
    double p;
    double radius;
    SquareMatrix center;
};

struct EquidistanceReport {
    double max_dev;                  // max - min over the scanned distances
    std::vector<double> distances;
    bool exhaustive;                 // false when the permutations were sampled
    bool within_tol;
};

struct UniquenessProbeReport {
    std::size_t n;
    double p;
    int trials;
    int falsifiers;     // trials whose enclosing radius did not exceed the threshold
    double min_margin;  // smallest observed radius - (n-1)^(1/p)
    double threshold;
};

/// Closed form under the Frobenius norm:
/// r(A) = sqrt(|A|_F^2 + n - 2 tr_min(A)), witness = transposed argmin.
BoundingBallReport bounding_ball_radius_s2(const SquareMatrix& a);

/// Exhaustive max of |A - P| over all permutations (n <= 8); exact for every
/// p because the distance is convex on the polytope. The p = 2 path uses the
/// trace identity instead of per-permutation spectra.
BoundingBallReport bounding_ball_radius_enum(const SquareMatrix& a, SchattenExponent p);

/// Monte-Carlo lower bound for dimensions past the enumeration ceiling.
BoundingBallReport bounding_ball_radius_sampled(const SquareMatrix& a, SchattenExponent p,
                                                int samples, std::uint64_t seed);

/// Frobenius sandwich sqrt(|D|^2+n-2) <= r(D) <= sqrt(|D|^2+n) for doubly
/// stochastic centers.
std::pair<double, double> radius_bounds_s2(const DoublyStochasticMatrix& d);

/// Chebyshev radius (n-1)^(1/p) with center J_n.
ChebyshevReport chebyshev_radius(std::size_t n, SchattenExponent p);

/// Norm of alpha*J_n - I_n along the central line: (n-1 + |1-alpha|^p)^(1/p),
/// minimized at alpha = 1.
double alpha_line_norm(double alpha, std::size_t n, SchattenExponent p);

/// Distance spread from `a` to the permutation matrices (all of them for
/// n <= 8, otherwise `samples` random ones).
EquidistanceReport equidistance_check(const SquareMatrix& a, SchattenExponent p, double tol,
                                      int samples = 20000, std::uint64_t seed = 0);

/// Randomized falsification attempt on the uniqueness of the Chebyshev
/// center: perturbations of J_n (and random doubly stochastic matrices) at
/// Frobenius distance >= 1e-3 must all have enclosing radius strictly above
/// (n-1)^(1/p). n <= 6.
UniquenessProbeReport center_uniqueness_probe(std::size_t n, SchattenExponent p, int trials,
                                              std::uint64_t seed);

}  // namespace birkhoff
