#include "qpe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qpe/compensated.hpp"
#include "qpe/detail/phase.hpp"
#include "qpe/errors.hpp"
#include "qpe/trigamma.hpp"

namespace qpe {

namespace {

void check_exact_sum_budget(const RegisterSpec& spec) {
  validate(spec);
  if (spec.p > detail::kMaxExactSumGuardQubits) {
    throw budget_error("exact window sum needs 2^" + std::to_string(spec.p - 1) +
                       " terms; budget is p <= " +
                       std::to_string(detail::kMaxExactSumGuardQubits) +
                       " (use the trigamma bound instead)");
  }
  if (spec.t() > detail::kMaxExactSumRegisterQubits) {
    throw budget_error("register size t = " + std::to_string(spec.t()) +
                       " exceeds the closed-form evaluation range t <= " +
                       std::to_string(detail::kMaxExactSumRegisterQubits));
  }
}

double clamp_unit(double x) {
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

void check_epsilon_domain(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("epsilon must lie strictly inside (0, 1)");
  }
}

}  // namespace

FailureReport failure_probability(const RegisterSpec& spec, double a,
                                  WindowConvention convention) {
  check_exact_sum_budget(spec);
  if (!(a >= 0.0 && a < 1.0)) {
    throw std::domain_error("scaled offset a must lie in [0, 1)");
  }
  // a integral means the phase is exactly representable: the distribution is
  // a point mass on an in-window outcome, so the failure probability is 0.
  if (a == 0.0) return {0.0, spec, a, convention};

  const int t = spec.t();
  const auto limits = window_limits(convention, std::int64_t{1} << (spec.p - 1));
  const double numerator = detail::sin_pi_unit(a);  // sin(pi a), 2sin^2 form of 1 - cos 2pi a
  const double scale = std::ldexp(numerator, -t);

  // Success probability as a sum of per-outcome probabilities
  // [2^{-t} sin(pi a) / sin(pi (a - l)/2^t)]^2, accumulated from the window
  // edge inward (smallest terms first) with compensation.
  CompensatedSum success;
  for (std::int64_t ell = limits.hi; ell >= limits.lo; --ell) {
    const double arg = M_PI * ((a - static_cast<double>(ell)) / std::ldexp(1.0, t));
    const double q = scale / std::sin(arg);
    success.add(q * q);
  }
  return {clamp_unit(1.0 - success.result()), spec, a, convention};
}

FailureReport worst_case_failure(const RegisterSpec& spec) {
  check_exact_sum_budget(spec);
  const int t = spec.t();
  const std::int64_t terms = std::int64_t{1} << (spec.p - 1);

  CompensatedSum sum;
  for (std::int64_t ell = terms; ell >= 1; --ell) {
    const double arg =
        M_PI * (static_cast<double>(2 * ell - 1) / std::ldexp(1.0, t + 1));
    const double s = std::sin(arg);
    sum.add(1.0 / (s * s));
  }
  // 2^{-(2t-1)} is an exact scaling of both accumulator words, so
  // 1 - scaled_hi is exact (Sterbenz) and the single rounding happens at the
  // magnitude of eps itself.
  const double scaled_hi = std::ldexp(sum.high(), -(2 * t - 1));
  const double scaled_lo = std::ldexp(sum.low(), -(2 * t - 1));
  const double eps = (1.0 - scaled_hi) - scaled_lo;
  return {clamp_unit(eps), spec, 0.5, WindowConvention::Symmetric};
}

double asymptotic_failure_t_infinity(int p) {
  if (p < 1 || p > 64) {
    throw std::domain_error("asymptotic_failure_t_infinity requires 1 <= p <= 64");
  }
  const double two_over_pi_sq = 2.0 / (M_PI * M_PI);
  return two_over_pi_sq * trigamma_half_integer(std::uint64_t{1} << (p - 1));
}

double asymptotic_failure_p_infinity(int p) {
  if (p < 1) throw std::domain_error("asymptotic_failure_p_infinity requires p >= 1");
  return std::ldexp(4.0 / (M_PI * M_PI), -p);
}

namespace detail {

int guarded_ceil(double x) {
  const double guard = std::fabs(x) * std::numeric_limits<double>::epsilon();
  return static_cast<int>(std::ceil(x - guard));
}

}  // namespace detail

namespace {

int clamped_ceil_log2(double argument) {
  return std::max(1, detail::guarded_ceil(std::log2(argument)));
}

}  // namespace

int p_infinity_inverse_printed(double epsilon) {
  check_epsilon_domain(epsilon);
  return clamped_ceil_log2(2.0 * std::sqrt(2.0) / (M_PI * M_PI * epsilon));
}

int p_infinity_inverse_exact(double epsilon) {
  check_epsilon_domain(epsilon);
  return clamped_ceil_log2(4.0 / (M_PI * M_PI * epsilon));
}

int cleve_bound(double epsilon) {
  check_epsilon_domain(epsilon);
  return clamped_ceil_log2(1.0 / (2.0 * epsilon) + 0.5);
}

int ib_bound(double epsilon) {
  check_epsilon_domain(epsilon);
  const double x = std::log2(1.0 / (2.0 * epsilon) + 2.0) + std::log2(M_PI);
  return std::max(1, detail::guarded_ceil(x));
}

}  // namespace qpe
