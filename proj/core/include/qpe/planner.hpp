#pragma once

#include <vector>

#include "qpe/register.hpp"

namespace qpe {

/// Which failure-probability formula drives the guard-qubit scan.
enum class BoundMethod {
  Exact,     ///< worst-case closed form; depends on s
  Trigamma,  ///< large-register trigamma bound; ignores s, never under-reports
};

/// Planner result: minimal p, plus whether the exact scan ran out of budget
/// and finished on the (conservative) trigamma bound.
struct GuardPlan {
  int p = 1;
  bool trigamma_fallback = false;
};

/// Smallest p >= 1 with eps(s, p) <= epsilon_target under the chosen method.
/// Ascending linear scan with a monotonicity check between consecutive
/// evaluations; throws std::domain_error for epsilon_target outside (0, 1)
/// and budget_error if no p <= 64 reaches the target.
GuardPlan plan_guard_qubits(int s, double epsilon_target, BoundMethod method);

/// Convenience wrapper returning just the qubit count.
int min_guard_qubits(int s, double epsilon_target, BoundMethod method);

/// One epsilon-target row across every bound formula.
struct BoundComparison {
  double epsilon_target = 0.0;
  int s = 1;
  int p_exact = 1;
  int p_trigamma = 1;
  int p_cleve = 1;
  int p_ib = 1;
  int p_inf_printed = 1;
  int p_inf_exact_inverse = 1;
};

BoundComparison compare_bounds(int s, double epsilon_target);

/// One row of the side-by-side failure-probability table.
struct TableRow {
  int p = 1;
  double epsilon_exact = 0.0;
  double epsilon_trigamma = 0.0;
  double epsilon_p_infinity = 0.0;
};

/// Rows for p = 1..p_max: exact worst case, trigamma bound, and the
/// 2^{-p} asymptote. epsilon_exact <= epsilon_trigamma on every row.
std::vector<TableRow> emit_table(int s, int p_max);

namespace detail {
/// Hard cap on planner scans; beyond this eps is not meaningful in doubles.
inline constexpr int kMaxPlannerGuardQubits = 64;
}  // namespace detail

}  // namespace qpe
