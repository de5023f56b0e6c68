#include "qpe/planner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpe/bounds.hpp"
#include "qpe/errors.hpp"

namespace qpe {

namespace {

void check_target(int s, double epsilon_target) {
  if (s < 1) throw std::domain_error("planner requires s >= 1");
  if (!(epsilon_target > 0.0 && epsilon_target < 1.0)) {
    throw std::domain_error("epsilon target must lie strictly inside (0, 1)");
  }
}

}  // namespace

GuardPlan plan_guard_qubits(int s, double epsilon_target, BoundMethod method) {
  check_target(s, epsilon_target);

  GuardPlan plan;
  bool use_trigamma = method == BoundMethod::Trigamma;
  double previous = 1.0;
  for (int p = 1; p <= detail::kMaxPlannerGuardQubits; ++p) {
    if (!use_trigamma &&
        (p > detail::kMaxExactSumGuardQubits ||
         s + p > detail::kMaxExactSumRegisterQubits)) {
      use_trigamma = true;
      plan.trigamma_fallback = true;
    }
    const double eps = use_trigamma
                           ? asymptotic_failure_t_infinity(p)
                           : worst_case_failure({s, p}).epsilon;
    // The linear scan doubles as a standing check of the monotone-in-p
    // property the inversion relies on.
    if (p > 1 && !(eps < previous)) {
      throw std::logic_error("failure probability failed to decrease from p = " +
                             std::to_string(p - 1) + " to " + std::to_string(p));
    }
    previous = eps;
    if (eps <= epsilon_target) {
      plan.p = p;
      return plan;
    }
  }
  throw budget_error("epsilon target unreachable within p <= " +
                     std::to_string(detail::kMaxPlannerGuardQubits));
}

int min_guard_qubits(int s, double epsilon_target, BoundMethod method) {
  return plan_guard_qubits(s, epsilon_target, method).p;
}

BoundComparison compare_bounds(int s, double epsilon_target) {
  check_target(s, epsilon_target);
  BoundComparison row;
  row.epsilon_target = epsilon_target;
  row.s = s;
  row.p_exact = min_guard_qubits(s, epsilon_target, BoundMethod::Exact);
  row.p_trigamma = min_guard_qubits(s, epsilon_target, BoundMethod::Trigamma);
  row.p_cleve = cleve_bound(epsilon_target);
  row.p_ib = ib_bound(epsilon_target);
  row.p_inf_printed = p_infinity_inverse_printed(epsilon_target);
  row.p_inf_exact_inverse = p_infinity_inverse_exact(epsilon_target);
  return row;
}

std::vector<TableRow> emit_table(int s, int p_max) {
  if (s < 1) throw std::domain_error("table requires s >= 1");
  if (p_max < 1) throw std::domain_error("table requires p_max >= 1");

  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(p_max));
  for (int p = 1; p <= p_max; ++p) {
    rows.push_back({p, worst_case_failure({s, p}).epsilon,
                    asymptotic_failure_t_infinity(p),
                    asymptotic_failure_p_infinity(p)});
  }
  return rows;
}

}  // namespace qpe
