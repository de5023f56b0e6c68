#pragma once

#include "qpe/register.hpp"

namespace qpe {

/// A failure probability together with the inputs that produced it.
struct FailureReport {
  double epsilon = 0.0;  ///< probability of missing the accepted window, in [0, 1]
  RegisterSpec spec;
  double a = 0.0;  ///< scaled phase offset in [0, 1) at which epsilon was evaluated
  WindowConvention convention = WindowConvention::Symmetric;
};

/// Failure probability for a register spec at scaled offset a in [0, 1):
///
///   eps = 1 - (1 - cos 2*pi*a) / 2^{2t+1} * sum_l csc^2(pi (a - l) / 2^t)
///
/// with l running over the convention's window limits. Every 1 - cos factor
/// is evaluated as 2 sin^2 of the half angle; the prefactor is distributed
/// into the sum so no intermediate can overflow. a = 0 (and generally a
/// coinciding with an in-window integer) is the exactly-representable-phase
/// case and returns eps = 0 without touching the singular term.
///
/// Throws std::domain_error for a outside [0, 1) or an invalid spec, and
/// budget_error when the term count 2^{p-1} exceeds the exact-sum budget.
FailureReport failure_probability(const RegisterSpec& spec, double a,
                                  WindowConvention convention);

/// Worst-case failure probability over the phase offset (attained at
/// a = 1/2, symmetric convention):
///
///   eps(s, p) = 1 - 2^{-(2t-1)} * sum_{l=1..2^{p-1}} csc^2(pi (2l-1) / 2^{t+1})
///
/// using the symmetry of the full window sum about l = 1/2. The final
/// combine scales the compensated sum by an exact power of two, so the
/// result is accurate to ~1 ulp even when eps is far below the magnitude of
/// intermediate terms; this keeps monotonicity in s and p strict in double
/// precision.
FailureReport worst_case_failure(const RegisterSpec& spec);

/// Large-register limit of the worst case, as an upper bound valid for any
/// s: (2/pi^2) * trigamma((1 + 2^p)/2). Requires 1 <= p <= 64.
double asymptotic_failure_t_infinity(int p);

/// Many-guard-qubit asymptote (4/pi^2) * 2^{-p}. Requires p >= 1.
double asymptotic_failure_p_infinity(int p);

/// Guard-qubit count from inverting the p->infinity asymptote in its
/// published ceil(log2(2*sqrt(2)/(pi^2 eps))) form. Note this is not the
/// algebraic inverse of asymptotic_failure_p_infinity (that would carry
/// 4/pi^2, not 2*sqrt(2)/pi^2); the planner exposes both. Clamped at 1.
int p_infinity_inverse_printed(double epsilon);

/// Algebraic inverse of asymptotic_failure_p_infinity:
/// ceil(log2(4/(pi^2 eps))), clamped at 1.
int p_infinity_inverse_exact(double epsilon);

/// Classic guard-qubit upper bound ceil(log2(1/(2 eps) + 1/2)), clamped at 1.
int cleve_bound(double epsilon);

/// Alternative published bound ceil(log2(1/(2 eps) + 2) + log2 pi),
/// clamped at 1.
int ib_bound(double epsilon);

namespace detail {

/// Exact-sum term budget: window sums are evaluated term by term only for
/// p <= 26 (at most 2^25 terms); beyond that callers get a budget_error and
/// should fall back to the trigamma upper bound, which never under-reports.
inline constexpr int kMaxExactSumGuardQubits = 26;

/// Register-size cap for closed-form evaluation; beyond this the csc^2
/// terms leave double range. Far above anything distinguishable from the
/// t -> infinity limit in double precision.
inline constexpr int kMaxExactSumRegisterQubits = 500;

/// ceil(x) with a one-ulp downward guard, so a log2 argument that is an
/// exact power of two does not round up a whole qubit on rounding noise.
int guarded_ceil(double x);

}  // namespace detail

}  // namespace qpe
