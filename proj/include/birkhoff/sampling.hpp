#pragma once

#include <cstdint>

#include "birkhoff/matrix.hpp"

namespace birkhoff {

/// Convex combination of k uniform random permutations with Dirichlet(1)
/// weights (uniform on the simplex). k = 1 returns a permutation matrix.
DoublyStochasticMatrix sample_convex(std::size_t n, std::size_t k, std::uint64_t seed);

/// Sinkhorn-Knopp balancing of a strictly positive random matrix (entries
/// uniform in (0.1, 1)): alternate row and column normalization until all
/// sums are within `tol` of 1. Produces interior points with full support.
DoublyStochasticMatrix sample_sinkhorn(std::size_t n, std::uint64_t seed, int max_iters = 1000,
                                       double tol = 1e-12);

}  // namespace birkhoff
