#pragma once

#include <cmath>

namespace pavelca {

// Neumaier compensated accumulator. Stage totals are sums of many
// similarly-sized contributions; the compensation keeps results independent
// of accumulation order well below the 1e-9 relative tolerance used by the
// reporting layer.
class StableSum {
  public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double get() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace pavelca
