#include "birkhoff/sampling.hpp"

#include <cmath>
#include <sstream>

#include "birkhoff/kahan.hpp"
#include "birkhoff/rng.hpp"

namespace birkhoff {

DoublyStochasticMatrix sample_convex(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
    if (k < 1) throw ValidationError("term count must be at least 1");

    Xoshiro256PlusPlus rng(seed);
    std::vector<std::vector<int>> perms;
    perms.reserve(k);
    for (std::size_t t = 0; t < k; ++t) perms.push_back(random_permutation(n, rng));

    // Dirichlet(1,...,1): normalized exponentials
    std::vector<double> weights(k);
    KahanAccumulator total;
    for (std::size_t t = 0; t < k; ++t) {
        double u;
        do {
            u = rng.next_double();
        } while (u == 0.0);
        weights[t] = -std::log(u);
        total.add(weights[t]);
    }

    SquareMatrix m(n);
    for (std::size_t t = 0; t < k; ++t) {
        const double w = weights[t] / total.value();
        for (std::size_t i = 0; i < n; ++i)
            m(i, static_cast<std::size_t>(perms[t][i])) += w;
    }
    return make_doubly_stochastic(std::move(m));
}

DoublyStochasticMatrix sample_sinkhorn(std::size_t n, std::uint64_t seed, int max_iters,
                                       double tol) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
    if (max_iters < 1) throw ValidationError("max_iters must be at least 1");
    if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");

    Xoshiro256PlusPlus rng(seed);
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double u;
            do {
                u = rng.next_double();
            } while (u == 0.0);
            m(i, j) = 0.1 + 0.9 * u;
        }
    }

    for (int iter = 0; iter < max_iters; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            KahanAccumulator row;
            for (std::size_t j = 0; j < n; ++j) row.add(m(i, j));
            const double s = row.value();
            for (std::size_t j = 0; j < n; ++j) m(i, j) /= s;
        }
        for (std::size_t j = 0; j < n; ++j) {
            KahanAccumulator col;
            for (std::size_t i = 0; i < n; ++i) col.add(m(i, j));
            const double s = col.value();
            for (std::size_t i = 0; i < n; ++i) m(i, j) /= s;
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            KahanAccumulator row, col;
            for (std::size_t j = 0; j < n; ++j) {
                row.add(m(i, j));
                col.add(m(j, i));
            }
            worst = std::max(worst, std::abs(row.value() - 1.0));
            worst = std::max(worst, std::abs(col.value() - 1.0));
        }
        if (worst <= tol) return make_doubly_stochastic(std::move(m), tol);
    }
    std::ostringstream msg;
    msg << "sinkhorn balancing did not reach tol = " << tol << " within " << max_iters
        << " iterations";
    throw ConvergenceError(msg.str());
}

}  // namespace birkhoff
