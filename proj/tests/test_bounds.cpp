#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qpe/bounds.hpp"
#include "qpe/errors.hpp"
#include "qpe/simulation.hpp"

using qpe::RegisterSpec;
using qpe::WindowConvention;

namespace {

// One failure probability through the simulator: build the closed-form
// distribution at phi = (b + a)/2^t and complement the window mass.
double failure_via_simulator(const RegisterSpec& spec, double a,
                             WindowConvention convention) {
  const int t = spec.t();
  const std::int64_t b = std::int64_t{1} << (t - 1);  // mid-register, exact
  const double phi = std::ldexp(static_cast<double>(b) + a, -t);
  const auto dist = qpe::distribution(t, phi);
  const auto decomp = qpe::decompose_phase(phi, t);
  const double success =
      qpe::window_success_probability(dist, decomp, qpe::window_for(spec, convention));
  return 1.0 - success;
}

}  // namespace

TEST_CASE("worst case at s=1 p=1 is (2 - sqrt 2)/4") {
  const double expected = (2.0 - std::sqrt(2.0)) / 4.0;
  CHECK(std::fabs(qpe::worst_case_failure({1, 1}).epsilon - expected) < 1e-12);
  CHECK(std::fabs(qpe::failure_probability({1, 1}, 0.5, WindowConvention::Symmetric).epsilon -
                  expected) < 1e-12);
  // pre-verified against the simulator path
  CHECK(std::fabs(failure_via_simulator({1, 1}, 0.5, WindowConvention::Symmetric) -
                  expected) < 1e-12);
}

TEST_CASE("frozen worst-case values") {
  CHECK(std::fabs(qpe::worst_case_failure({2, 2}).epsilon - 0.094108086369249337) < 1e-12);
  CHECK(std::fabs(qpe::worst_case_failure({4, 2}).epsilon - 0.099041539433934040) < 1e-12);
  CHECK(std::fabs(qpe::worst_case_failure({10, 5}).epsilon - 0.012661020870949955) < 1e-12);
  CHECK(std::fabs(qpe::worst_case_failure({10, 6}).epsilon - 0.0063320538404098880) < 1e-12);
  // cross-checked against the simulator path
  CHECK(std::fabs(failure_via_simulator({2, 2}, 0.5, WindowConvention::Symmetric) -
                  0.094108086369249337) < 1e-12);
}

TEST_CASE("exactly representable phase never fails") {
  for (auto convention : {WindowConvention::Symmetric, WindowConvention::Asymmetric}) {
    CHECK(qpe::failure_probability({3, 2}, 0.0, convention).epsilon == 0.0);
    CHECK(qpe::failure_probability({12, 8}, 0.0, convention).epsilon == 0.0);
  }
}

TEST_CASE("domain and budget errors") {
  CHECK_THROWS_AS(qpe::failure_probability({1, 1}, 1.0, WindowConvention::Symmetric),
                  std::domain_error);
  CHECK_THROWS_AS(qpe::failure_probability({1, 1}, -0.1, WindowConvention::Symmetric),
                  std::domain_error);
  CHECK_THROWS_AS(qpe::failure_probability({0, 1}, 0.5, WindowConvention::Symmetric),
                  std::domain_error);
  CHECK_THROWS_AS(qpe::worst_case_failure({1, 27}), qpe::budget_error);
  CHECK_THROWS_AS(qpe::worst_case_failure({490, 26}), qpe::budget_error);
}

TEST_CASE("symmetry reduction: full window sum at a = 1/2 equals the half-sum form") {
  for (int s = 1; s <= 6; ++s) {
    for (int p = 1; p <= 6; ++p) {
      const RegisterSpec spec{s, p};
      const double full =
          qpe::failure_probability(spec, 0.5, WindowConvention::Symmetric).epsilon;
      const double half = qpe::worst_case_failure(spec).epsilon;
      CHECK(std::fabs(full - half) <= 1e-14);
    }
  }
}

TEST_CASE("symmetric convention fails at least as often as asymmetric") {
  for (int s = 1; s <= 5; ++s) {
    for (int p = 1; p <= 5; ++p) {
      for (int i = 0; i < 16; ++i) {
        const double a = i / 16.0;
        const double sym =
            qpe::failure_probability({s, p}, a, WindowConvention::Symmetric).epsilon;
        const double asym =
            qpe::failure_probability({s, p}, a, WindowConvention::Asymmetric).epsilon;
        CHECK(sym >= asym);
      }
    }
  }
}

TEST_CASE("formula matches the simulator on a coarse grid") {
  for (int t = 2; t <= 10; ++t) {
    for (int i = 0; i < 16; ++i) {
      const double a = i / 16.0;
      for (int p = 1; p < t; ++p) {
        const RegisterSpec spec{t - p, p};
        for (auto convention :
             {WindowConvention::Symmetric, WindowConvention::Asymmetric}) {
          const double formula = qpe::failure_probability(spec, a, convention).epsilon;
          const double oracle = failure_via_simulator(spec, a, convention);
          CHECK(std::fabs(formula - oracle) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("worst case is strictly monotone in s and p on a modest grid") {
  for (int p = 1; p <= 8; ++p) {
    const double limit = qpe::asymptotic_failure_t_infinity(p);
    for (int s = 1; s <= 8; ++s) {
      const double here = qpe::worst_case_failure({s, p}).epsilon;
      CHECK(here < qpe::worst_case_failure({s + 1, p}).epsilon);
      CHECK(qpe::worst_case_failure({s + 1, p}).epsilon < limit);
      CHECK(qpe::worst_case_failure({s, p + 1}).epsilon < here);
    }
  }
}

TEST_CASE("large-register trigamma bound") {
  CHECK(std::fabs(qpe::asymptotic_failure_t_infinity(1) - (1.0 - 8.0 / (M_PI * M_PI))) <
        1e-15);
  const double expected_p2 =
      2.0 / (M_PI * M_PI) * (M_PI * M_PI / 2.0 - 4.0 - 4.0 / 9.0);
  CHECK(std::fabs(qpe::asymptotic_failure_t_infinity(2) - expected_p2) < 1e-15);

  const double at_p10 = qpe::asymptotic_failure_t_infinity(10);
  CHECK(std::fabs(at_p10 - 3.9578574778610909e-4) < 1e-15);
  const double p_inf_10 = 4.0 / (M_PI * M_PI * 1024.0);
  CHECK(std::fabs(at_p10 - p_inf_10) / p_inf_10 < 1e-3);  // within 0.1%

  CHECK_THROWS_AS(qpe::asymptotic_failure_t_infinity(0), std::domain_error);
  CHECK_THROWS_AS(qpe::asymptotic_failure_t_infinity(65), std::domain_error);
}

TEST_CASE("2^p asymptote: value, exact halving, ratio convergence") {
  CHECK(std::fabs(qpe::asymptotic_failure_p_infinity(1) - 2.0 / (M_PI * M_PI)) < 1e-15);
  CHECK(std::fabs(qpe::asymptotic_failure_p_infinity(10) - 3.9578587360288192e-4) < 1e-15);
  for (int p = 1; p <= 40; ++p) {
    CHECK(qpe::asymptotic_failure_p_infinity(p + 1) ==
          0.5 * qpe::asymptotic_failure_p_infinity(p));
  }

  const double c = 4.0 / (M_PI * M_PI);
  for (int p = 8; p <= 20; ++p) {
    const double ratio = std::ldexp(qpe::asymptotic_failure_t_infinity(p), p);
    const double deviation = std::fabs(ratio - c) / c;
    CHECK(deviation <= 1e-2);
    if (p >= 12) CHECK(deviation <= 1e-4);
  }
}

TEST_CASE("offsets near 1 stay consistent with the simulator") {
  // the prefactor reflects sin(pi a) about 1/2, so a -> 1 keeps full accuracy
  const double a = 1.0 - std::ldexp(1.0, -20);
  for (auto convention :
       {WindowConvention::Symmetric, WindowConvention::Asymmetric}) {
    const double formula = qpe::failure_probability({3, 2}, a, convention).epsilon;
    const double oracle = failure_via_simulator({3, 2}, a, convention);
    CHECK(std::fabs(formula - oracle) <= 1e-12);
  }
}

TEST_CASE("non-dyadic offsets round-trip through a phase decomposition") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 32; ++trial) {
    const RegisterSpec spec{3, 3};
    const int t = spec.t();
    const double phi = uniform(rng);
    const auto decomp = qpe::decompose_phase(phi, t);
    const auto dist = qpe::distribution(t, phi);
    for (auto convention :
         {WindowConvention::Symmetric, WindowConvention::Asymmetric}) {
      const double success = qpe::window_success_probability(
          dist, decomp, qpe::window_for(spec, convention));
      const double formula =
          qpe::failure_probability(spec, decomp.a, convention).epsilon;
      CHECK(std::fabs(formula - (1.0 - success)) <= 1e-12);
    }
  }
}

TEST_CASE("large registers evaluate without overflow") {
  // t = s + p within the range cap; csc^2 terms reach ~2^{2t} here
  const double eps = qpe::worst_case_failure({400, 2}).epsilon;
  CHECK(std::isfinite(eps));
  CHECK(eps > 0.0);
  CHECK(eps < qpe::asymptotic_failure_t_infinity(2));
  // indistinguishable from the limit at this depth
  CHECK(std::fabs(eps - qpe::asymptotic_failure_t_infinity(2)) < 1e-15);

  const double general =
      qpe::failure_probability({400, 2}, 0.5, WindowConvention::Symmetric).epsilon;
  CHECK(std::fabs(general - eps) <= 1e-14);
}

TEST_CASE("trigamma bound at the planner cap") {
  const double at_cap = qpe::asymptotic_failure_t_infinity(64);
  const double asymptote = qpe::asymptotic_failure_p_infinity(64);
  CHECK(std::isfinite(at_cap));
  CHECK(std::fabs(at_cap - asymptote) / asymptote < 1e-9);
}

TEST_CASE("guard-qubit formulas at published points") {
  CHECK(qpe::cleve_bound(0.5) == 1);
  CHECK(qpe::cleve_bound(0.1) == 3);
  CHECK(qpe::cleve_bound(0.01) == 6);
  // log argument lands exactly on 4.0 here; the guarded ceiling keeps it at 2
  CHECK(qpe::cleve_bound(1.0 / 7.0) == 2);

  CHECK(qpe::ib_bound(0.1) == 5);
  CHECK(qpe::ib_bound(0.01) == 8);
  CHECK(qpe::ib_bound(0.5) == 4);

  CHECK(qpe::p_infinity_inverse_printed(0.1) == 2);
  CHECK(qpe::p_infinity_inverse_printed(0.01) == 5);
  CHECK(qpe::p_infinity_inverse_printed(2.0 / (M_PI * M_PI)) == 1);

  CHECK(qpe::p_infinity_inverse_exact(0.1) == 3);
  CHECK(qpe::p_infinity_inverse_exact(0.01) == 6);

  for (double bad : {0.0, 1.0, -0.5, 2.0}) {
    CHECK_THROWS_AS(qpe::cleve_bound(bad), std::domain_error);
    CHECK_THROWS_AS(qpe::ib_bound(bad), std::domain_error);
    CHECK_THROWS_AS(qpe::p_infinity_inverse_printed(bad), std::domain_error);
    CHECK_THROWS_AS(qpe::p_infinity_inverse_exact(bad), std::domain_error);
  }
}
