#pragma once

#include <cmath>

namespace slabheat {

/// Neumaier-compensated accumulator. Summation order is the caller's
/// responsibility; with a fixed order the result is reproducible across
/// platforms and build modes (requires -ffp-contract=off).
class KahanSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace slabheat
