#include "birkhoff/assignment.hpp"

#include <limits>
#include <sstream>
#include <vector>

#include "birkhoff/geometry.hpp"
#include "birkhoff/kahan.hpp"

namespace birkhoff {

namespace {

// Shortest augmenting path with dual potentials, 1-indexed with column 0 as
// the virtual start. rowsol[i] is the column assigned to row i of `cost`.
std::vector<int> solve_assignment(const SquareMatrix& cost) {
    const int n = static_cast<int>(cost.dim());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> rowsol(n, -1);
    for (int j = 1; j <= n; ++j) rowsol[p[j] - 1] = j - 1;
    return rowsol;
}

// tr(AP) = sum_k A(sigma[k], k), compensated so that exact-rational inputs
// (e.g. J_n) produce exact values.
double selected_trace(const SquareMatrix& a, const std::vector<int>& sigma) {
    KahanAccumulator acc;
    for (std::size_t k = 0; k < sigma.size(); ++k)
        acc.add(a(static_cast<std::size_t>(sigma[k]), k));
    return acc.value();
}

}  // namespace

MinTraceResult min_trace_hungarian(const SquareMatrix& a) {
    const std::vector<int> sigma = solve_assignment(transpose(a));
    return MinTraceResult{selected_trace(a, sigma), PermutationMatrix(sigma)};
}

MinTraceResult min_trace_bruteforce(const SquareMatrix& a) {
    const std::size_t n = a.dim();
    if (n > kBruteForceMaxDim) {
        std::ostringstream msg;
        msg << "brute-force enumeration limited to n <= " << kBruteForceMaxDim << ", got " << n;
        throw SizeLimitError(msg.str());
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_sigma;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        const double value = selected_trace(a, sigma);
        if (value < best) {
            best = value;
            best_sigma = sigma;
        }
    });
    return MinTraceResult{best, PermutationMatrix(std::move(best_sigma))};
}

double min_trace_from_radius(const DoublyStochasticMatrix& d) {
    const SquareMatrix& m = d.matrix();
    const double r = bounding_ball_radius_s2(m).radius;
    const double f = frobenius_norm(m);
    return (f * f + static_cast<double>(m.dim()) - r * r) / 2.0;
}

}  // namespace birkhoff
