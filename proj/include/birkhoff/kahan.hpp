#pragma once

#include <span>

namespace birkhoff {

/// Kahan compensated accumulator. Row/column sums and selected-diagonal sums
/// go through this so that validation tolerances are spent on the data, not
/// on summation error.
class KahanAccumulator {
public:
    void add(double x) noexcept {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double kahan_sum(std::span<const double> xs) noexcept {
    KahanAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace birkhoff
