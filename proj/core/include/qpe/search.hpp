#pragma once

#include <cstdint>

#include "qpe/register.hpp"

namespace qpe {

/// Outcome of the worst-offset search.
struct SearchResult {
  double a_star = 0.0;            ///< offset attaining the largest failure probability seen
  double epsilon_star = 0.0;      ///< failure probability at a_star
  std::int64_t evaluations = 0;   ///< number of failure-probability evaluations
  double derivative_at_half = 0.0;  ///< central finite difference of eps at a = 1/2, step 1e-5
};

/// Maximize the symmetric-convention failure probability over the scaled
/// offset a in [0, 1): a uniform grid scan picks the best cell (ties toward
/// the smaller a), golden-section refinement shrinks the surrounding bracket
/// below tol, and a central finite difference at a = 1/2 witnesses the
/// stationarity of the maximum. Deterministic for fixed arguments.
///
/// Requires grid_points >= 16 and tol > 0; budget errors from the bound
/// evaluation propagate.
SearchResult maximize_failure(const RegisterSpec& spec, int grid_points = 1024,
                              double tol = 1e-9);

}  // namespace qpe
