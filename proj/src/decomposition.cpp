#include "birkhoff/decomposition.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "birkhoff/kahan.hpp"

namespace birkhoff {

BirkhoffDecomposition::BirkhoffDecomposition(std::vector<BirkhoffTerm> terms)
    : terms_(std::move(terms)) {
    if (terms_.empty()) throw ValidationError("decomposition needs at least one term");
    const std::size_t n = terms_.front().perm.dim();
    for (const auto& term : terms_) {
        if (term.perm.dim() != n)
            throw DimensionError("decomposition terms have mismatched dimensions");
        if (!(term.weight > 0.0) || term.weight > 1.0 + kDefaultTolerance)
            throw ValidationError("decomposition weights must lie in (0, 1]");
    }
}

double BirkhoffDecomposition::weight_sum() const {
    KahanAccumulator acc;
    for (const auto& term : terms_) acc.add(term.weight);
    return acc.value();
}

SquareMatrix BirkhoffDecomposition::reconstruct() const {
    SquareMatrix out(dim());
    for (const auto& term : terms_)
        for (std::size_t i = 0; i < dim(); ++i)
            out(i, static_cast<std::size_t>(term.perm.image(i))) += term.weight;
    return out;
}

namespace {

double frobenius(const SquareMatrix& m) {
    KahanAccumulator acc;
    for (double v : m.entries()) acc.add(v * v);
    return std::sqrt(acc.value());
}

// Kuhn's augmenting-path matching on the support graph; returns row -> col
// or an empty vector when no perfect matching exists.
std::vector<int> support_matching(const SquareMatrix& r) {
    const std::size_t n = r.dim();
    std::vector<int> col_owner(n, -1);
    std::vector<char> visited(n);
    std::function<bool(std::size_t)> augment = [&](std::size_t row) {
        for (std::size_t j = 0; j < n; ++j) {
            if (visited[j] || !(r(row, j) > kSupportThreshold)) continue;
            visited[j] = 1;
            if (col_owner[j] < 0 || augment(static_cast<std::size_t>(col_owner[j]))) {
                col_owner[j] = static_cast<int>(row);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(i)) return {};
    }
    std::vector<int> sigma(n);
    for (std::size_t j = 0; j < n; ++j)
        sigma[static_cast<std::size_t>(col_owner[j])] = static_cast<int>(j);
    return sigma;
}

}  // namespace

BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d) {
    SquareMatrix r = d.matrix();
    const std::size_t n = r.dim();
    std::vector<BirkhoffTerm> terms;
    const std::size_t max_peels = n * n + 1;

    while (frobenius(r) > kResidualThreshold) {
        std::vector<int> sigma = support_matching(r);
        if (sigma.empty()) {
            std::ostringstream msg;
            msg << "no perfect matching on the residual support after " << terms.size()
                << " terms; input is not a convex combination of permutations within tolerance";
            throw MatchingError(msg.str());
        }
        double w = r(0, static_cast<std::size_t>(sigma[0]));
        for (std::size_t i = 1; i < n; ++i)
            w = std::min(w, r(i, static_cast<std::size_t>(sigma[i])));
        for (std::size_t i = 0; i < n; ++i)
            r(i, static_cast<std::size_t>(sigma[i])) -= w;  // the min entry lands on exact 0
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r(i, j) < kSupportThreshold) r(i, j) = 0.0;
        terms.push_back(BirkhoffTerm{w, PermutationMatrix(std::move(sigma))});
        if (terms.size() > max_peels)
            throw MatchingError("peeling did not terminate; residual refuses to vanish");
    }
    return BirkhoffDecomposition(std::move(terms));
}

SquareMatrix average_all_permutations(std::size_t n) {
    if (n < 1) throw DimensionError("matrix dimension must be at least 1");
    if (n > kAverageMaxDim) {
        std::ostringstream msg;
        msg << "uniform permutation average limited to n <= " << kAverageMaxDim << ", got "
            << n;
        throw SizeLimitError(msg.str());
    }
    SquareMatrix sum(n);
    double count = 0.0;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        for (std::size_t i = 0; i < n; ++i)
            sum(i, static_cast<std::size_t>(sigma[i])) += 1.0;
        count += 1.0;
    });
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = sum(i, j) / count;
    return out;
}

SquareMatrix khoury_projection(const SquareMatrix& b) {
    const std::size_t n = b.dim();
    const double inv = 1.0 / static_cast<double>(n);
    SquareMatrix w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = (i == j ? 1.0 : 0.0) - inv;
    SquareMatrix out = matrix_product(matrix_product(w, b), w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) += inv;
    return out;
}

}  // namespace birkhoff
