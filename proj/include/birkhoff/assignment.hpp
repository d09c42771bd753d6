#pragma once

#include <cstddef>

#include "birkhoff/matrix.hpp"

namespace birkhoff {

/// Exact enumeration guard: 9! = 362880 permutations.
inline constexpr std::size_t kBruteForceMaxDim = 9;

/// Minimal trace min_P tr(AP) together with a permutation attaining it.
/// Convention (pinned by tests): tr(A P) = sum_k A(sigma[k], k) where
/// sigma is the stored row->column vector of P, so the argmin's inverse
/// reads off the selected cells row by row.
struct MinTraceResult {
    double value;
    PermutationMatrix argmin;
};

/// Shortest-augmenting-path assignment solver (Jonker-Volgenant style
/// potentials), O(n^3), exact on real costs. Solves the problem on A^T so
/// the returned permutation minimizes tr(AP) directly.
MinTraceResult min_trace_hungarian(const SquareMatrix& a);

/// Full enumeration over all n! permutations, n <= 9. Ties break toward the
/// lexicographically smallest sigma.
MinTraceResult min_trace_bruteforce(const SquareMatrix& a);

/// Recovers the minimal trace from the bounding-ball radius:
/// (|D|_F^2 + n - r^2) / 2. Agrees with the Hungarian value up to round-off.
double min_trace_from_radius(const DoublyStochasticMatrix& d);

}  // namespace birkhoff
