#pragma once

#include <cmath>

namespace qpe {

/// Neumaier (improved Kahan-Babuska) compensated accumulator.
///
/// Tracks the exact rounding error of every addition in a separate
/// compensation word, so ill-conditioned sums (terms spanning many orders of
/// magnitude, or a large constant nearly cancelled by many small terms) come
/// out correct to ~1 ulp of the true sum instead of ~1 ulp of the largest
/// intermediate.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  /// Running high word, without the compensation folded in.
  double high() const { return sum_; }
  /// Accumulated compensation word.
  double low() const { return comp_; }
  /// Best estimate of the sum.
  double result() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace qpe
