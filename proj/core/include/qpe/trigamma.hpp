#pragma once

#include <cstdint>

namespace qpe {

/// trigamma(n + 1/2) for non-negative integer n.
///
/// Evaluated through the exact finite identity
///
///   trigamma(n + 1/2) = pi^2/2 - 4 * sum_{k=1..n} (2k-1)^{-2}
///
/// (base value trigamma(1/2) = pi^2/2 walked down by the recurrence
/// trigamma(z+1) = trigamma(z) - z^{-2}). Above a crossover index the
/// truncated asymptotic series 1/z + 1/(2 z^2) + 1/(6 z^3) takes over, where
/// z = n + 1/2. The result is positive and strictly decreasing in n.
double trigamma_half_integer(std::uint64_t n);

namespace detail {

/// Index above which trigamma_half_integer switches from the finite sum to
/// the asymptotic series. Both paths agree to better than 1e-12 relative
/// here (they are asserted to in the test suite).
inline constexpr std::uint64_t kTrigammaCrossover = 10000;

/// Finite-identity path, valid for any n but O(n) in time.
double trigamma_half_finite_sum(std::uint64_t n);

/// Three-term asymptotic series at z = n + 1/2; accurate only for large n.
double trigamma_half_asymptotic(std::uint64_t n);

}  // namespace detail

}  // namespace qpe
