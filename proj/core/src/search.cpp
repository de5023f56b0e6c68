#include "qpe/search.hpp"

#include <cmath>
#include <stdexcept>

#include "qpe/bounds.hpp"

namespace qpe {

SearchResult maximize_failure(const RegisterSpec& spec, int grid_points, double tol) {
  validate(spec);
  if (grid_points < 16) throw std::domain_error("search grid needs at least 16 points");
  if (!(tol > 0.0)) throw std::domain_error("search tolerance must be positive");

  SearchResult result;
  const auto eval = [&](double a) {
    ++result.evaluations;
    return failure_probability(spec, a, WindowConvention::Symmetric).epsilon;
  };
  const auto consider = [&](double a, double eps) {
    if (eps > result.epsilon_star || (eps == result.epsilon_star && a < result.a_star)) {
      result.epsilon_star = eps;
      result.a_star = a;
    }
  };

  // Coarse pass over the whole period guards the refiner against latching
  // onto a secondary ripple between lattice points.
  result.a_star = 0.0;
  result.epsilon_star = eval(0.0);
  for (int i = 1; i < grid_points; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(grid_points);
    consider(a, eval(a));
  }

  const double spacing = 1.0 / static_cast<double>(grid_points);
  double lo = std::max(0.0, result.a_star - spacing);
  double hi = std::min(std::nextafter(1.0, 0.0), result.a_star + spacing);

  // Golden-section refinement of the maximum; >= keeps ties drifting toward
  // the smaller a.
  constexpr double kInvGolden = 0.6180339887498949;
  double c = hi - (hi - lo) * kInvGolden;
  double d = lo + (hi - lo) * kInvGolden;
  double fc = eval(c);
  double fd = eval(d);
  consider(c, fc);
  consider(d, fd);
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * kInvGolden;
      fc = eval(c);
      consider(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * kInvGolden;
      fd = eval(d);
      consider(d, fd);
    }
  }

  const double step = 1e-5;
  result.derivative_at_half = (eval(0.5 + step) - eval(0.5 - step)) / (2.0 * step);
  return result;
}

}  // namespace qpe
