#include "qpe/trigamma.hpp"

#include <cmath>

#include "qpe/compensated.hpp"

namespace qpe {

namespace {

// pi^2/2 split into two doubles; the pair represents the constant to
// ~1e-32. A single double here would cap the cancelled sum at ~5e-12
// relative accuracy for n near the crossover.
constexpr double kPiSqOver2Hi = 4.934802200544679;
constexpr double kPiSqOver2Lo = 3.1326477543698557e-16;

}  // namespace

namespace detail {

double trigamma_half_finite_sum(std::uint64_t n) {
  CompensatedSum acc;
  acc.add(kPiSqOver2Hi);
  acc.add(kPiSqOver2Lo);
  // Ascending term magnitude: k = n down to 1. Each term -4/(2k-1)^2 is fed
  // in as an exact head/tail pair so the heavily cancelled total (the sum
  // approaches pi^2/2 as n grows) still comes out correctly rounded.
  for (std::uint64_t k = n; k >= 1; --k) {
    const double odd = static_cast<double>(2 * k - 1);
    const double odd_sq = odd * odd;  // exact below 2^53
    const double head = -4.0 / odd_sq;
    const double div_residual = std::fma(head, odd_sq, 4.0);
    acc.add(head);
    acc.add(-div_residual / odd_sq);
  }
  return acc.result();
}

double trigamma_half_asymptotic(std::uint64_t n) {
  const double z = static_cast<double>(n) + 0.5;
  return 1.0 / z + 1.0 / (2.0 * z * z) + 1.0 / (6.0 * z * z * z);
}

}  // namespace detail

double trigamma_half_integer(std::uint64_t n) {
  if (n > detail::kTrigammaCrossover) {
    return detail::trigamma_half_asymptotic(n);
  }
  return detail::trigamma_half_finite_sum(n);
}

}  // namespace qpe
