#pragma once

#include <cmath>

namespace berrut {

/// Neumaier-compensated accumulator. The alternating sums in this project
/// mix terms whose magnitudes span many orders; plain accumulation loses
/// the low-order digits the residual checks depend on.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace berrut
