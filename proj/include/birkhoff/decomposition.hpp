#pragma once

#include <cstddef>
#include <vector>

#include "birkhoff/matrix.hpp"

namespace birkhoff {

/// Entries below this are treated as structural zeros during peeling.
inline constexpr double kSupportThreshold = 1e-12;
/// Peeling stops once the residual Frobenius norm falls below this.
inline constexpr double kResidualThreshold = 1e-9;
/// Full-enumeration guard for the uniform permutation average: 7! terms.
inline constexpr std::size_t kAverageMaxDim = 7;

struct BirkhoffTerm {
    double weight;
    PermutationMatrix perm;
};

/// Convex combination of permutation matrices. Not unique for a given
/// source matrix; only the reconstruction is contractual.
class BirkhoffDecomposition {
public:
    explicit BirkhoffDecomposition(std::vector<BirkhoffTerm> terms);

    const std::vector<BirkhoffTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    std::size_t dim() const noexcept { return terms_.front().perm.dim(); }

    double weight_sum() const;
    SquareMatrix reconstruct() const;

private:
    std::vector<BirkhoffTerm> terms_;
};

/// Greedy peeling: perfect matching on the support graph, subtract the
/// minimal matched entry times that permutation, repeat. Terms come back in
/// peeling order. Throws MatchingError if the support admits no perfect
/// matching (impossible for a genuine doubly stochastic matrix).
BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d);

/// (1/n!) sum of all permutation matrices; equals J_n. n <= 7.
SquareMatrix average_all_permutations(std::size_t n);

/// Nearest generalized doubly stochastic matrix in Frobenius distance:
/// (I-J) B (I-J) + J. Rows and columns of the output sum to 1; entries may
/// be negative. Fixes doubly stochastic inputs.
SquareMatrix khoury_projection(const SquareMatrix& b);

}  // namespace birkhoff
