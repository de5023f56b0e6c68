#include "qpe/simulation.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qpe/compensated.hpp"
#include "qpe/detail/phase.hpp"
#include "qpe/errors.hpp"

namespace qpe {

namespace {

void check_phi(double phi) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw std::domain_error("phase phi must lie in [0, 1)");
  }
}

void check_closed_form_budget(int t) {
  if (t < 1) throw std::domain_error("register size t must be >= 1");
  if (t > detail::kMaxClosedFormQubits) {
    throw budget_error("closed-form distribution budget is t <= " +
                       std::to_string(detail::kMaxClosedFormQubits));
  }
}

void check_transform_budget(int t) {
  if (t < 1) throw std::domain_error("register size t must be >= 1");
  if (t > detail::kMaxTransformQubits) {
    throw budget_error("transform-path budget is t <= " +
                       std::to_string(detail::kMaxTransformQubits));
  }
}

// In-place unitary radix-2 transform, e^{sign 2 pi i j k / n} / sqrt(n).
// Twiddles come from one table filled by direct sin/cos of exact dyadic
// turns, so there is no multiplicative drift across stages.
void unitary_fft(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t r = 0; r < n / 2; ++r) {
    twiddle[r] = detail::unit_phasor(sign * (static_cast<double>(r) / static_cast<double>(n)));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t r = 0; r < half; ++r) {
        const std::complex<double> w = twiddle[r * stride];
        const std::complex<double> u = a[start + r];
        const std::complex<double> v = a[start + r + half] * w;
        a[start + r] = u + v;
        a[start + r + half] = u - v;
      }
    }
  }

  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& amp : a) amp *= norm;
}

}  // namespace

PhaseDecomposition decompose_phase(double phi, int t) {
  check_phi(phi);
  if (t < 1 || t > 62) {
    throw std::domain_error("phase decomposition requires 1 <= t <= 62");
  }
  // ldexp and the lattice subtraction are exact, so b, delta and a carry no
  // rounding at all.
  const double scaled = std::ldexp(phi, t);
  const double b = std::floor(scaled);
  const double a = scaled - b;
  return {phi, t, static_cast<std::int64_t>(b), std::ldexp(a, -t), a};
}

StateVector stage1_state(int t, double phi) {
  check_transform_budget(t);
  check_phi(phi);
  const std::size_t n = std::size_t{1} << t;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  StateVector state{t, std::vector<std::complex<double>>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    state.amplitudes[k] =
        norm * detail::unit_phasor(detail::wrap_turns(static_cast<double>(k), phi));
  }
  return state;
}

StateVector inverse_qft(const StateVector& state) {
  check_transform_budget(state.t);
  if (state.amplitudes.size() != (std::size_t{1} << state.t)) {
    throw std::domain_error("state vector length does not match its register size");
  }
  StateVector out{state.t, state.amplitudes};
  unitary_fft(out.amplitudes, -1);
  return out;
}

StateVector forward_qft(const StateVector& state) {
  check_transform_budget(state.t);
  if (state.amplitudes.size() != (std::size_t{1} << state.t)) {
    throw std::domain_error("state vector length does not match its register size");
  }
  StateVector out{state.t, state.amplitudes};
  unitary_fft(out.amplitudes, +1);
  return out;
}

std::complex<double> amplitude_closed_form(const PhaseDecomposition& decomp,
                                           std::int64_t ell) {
  const std::int64_t half = std::int64_t{1} << (decomp.t - 1);
  if (!(-half < ell && ell <= half)) {
    throw std::domain_error("window index ell out of range for the register");
  }
  if (decomp.a == static_cast<double>(ell)) {
    return {1.0, 0.0};  // removable singularity: exact phase, point mass
  }
  const double offset = (decomp.a - static_cast<double>(ell)) / std::ldexp(1.0, decomp.t);
  const double magnitude =
      std::ldexp(detail::sin_pi_unit(decomp.a), -decomp.t) / std::sin(M_PI * offset);
  return magnitude * detail::unit_phasor(0.5 * (decomp.a - offset));
}

MeasurementDistribution distribution(int t, double phi) {
  check_closed_form_budget(t);
  const PhaseDecomposition decomp = decompose_phase(phi, t);
  const std::size_t n = std::size_t{1} << t;
  MeasurementDistribution dist{t, std::vector<double>(n, 0.0)};
  if (decomp.a == 0.0) {
    dist.probs[static_cast<std::size_t>(decomp.b)] = 1.0;
    return dist;
  }
  const std::int64_t half = std::int64_t{1} << (t - 1);
  const double scale = std::ldexp(detail::sin_pi_unit(decomp.a), -t);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t ell = static_cast<std::int64_t>(k) - decomp.b;
    if (ell > half) ell -= static_cast<std::int64_t>(n);
    if (ell <= -half) ell += static_cast<std::int64_t>(n);
    const double arg = M_PI * ((decomp.a - static_cast<double>(ell)) / std::ldexp(1.0, t));
    const double q = scale / std::sin(arg);
    dist.probs[k] = q * q;
  }
  return dist;
}

double window_success_probability(const MeasurementDistribution& dist,
                                  const PhaseDecomposition& decomp,
                                  const WindowSpec& window) {
  if (dist.t != decomp.t) {
    throw std::domain_error("distribution and decomposition disagree on register size");
  }
  const auto limits = window_limits(window.convention, window.e);
  const std::uint64_t n = std::uint64_t{1} << dist.t;
  const std::uint64_t mask = n - 1;

  CompensatedSum sum;
  if (static_cast<std::uint64_t>(limits.hi - limits.lo) + 1 >= n) {
    // Window covers the whole register; count every outcome exactly once.
    for (std::uint64_t k = n; k-- > 0;) sum.add(dist.probs[k]);
  } else {
    for (std::int64_t ell = limits.hi; ell >= limits.lo; --ell) {
      const std::uint64_t index =
          (static_cast<std::uint64_t>(decomp.b) + static_cast<std::uint64_t>(ell)) & mask;
      sum.add(dist.probs[index]);
    }
  }
  const double total = sum.result();
  return total > 1.0 ? 1.0 : (total < 0.0 ? 0.0 : total);
}

namespace detail {

RotationGate rotation_power(double phi, double power) {
  const double turns = wrap_turns(power, phi);
  const double angle = 2.0 * M_PI * turns;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

MeasurementDistribution rotation_demo(const RegisterSpec& spec, double phi) {
  validate(spec);
  const int t = spec.t();
  check_transform_budget(t);
  check_phi(phi);

  // Composite register (x) target state, target prepared in the rotation
  // eigenvector (1, -i)/sqrt(2); z0/z1 hold the target components.
  const std::size_t n = std::size_t{1} << t;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const std::complex<double> u0{1.0 / std::sqrt(2.0), 0.0};
  const std::complex<double> u1{0.0, -1.0 / std::sqrt(2.0)};
  std::vector<std::complex<double>> z0(n, norm * u0);
  std::vector<std::complex<double>> z1(n, norm * u1);

  // Kickback ladder: control qubit j applies U^{2^j} to the target.
  for (int j = 0; j < t; ++j) {
    const auto gate = detail::rotation_power(phi, std::ldexp(1.0, j));
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t k = 0; k < n; ++k) {
      if (k & bit) {
        const std::complex<double> a0 = z0[k];
        const std::complex<double> a1 = z1[k];
        z0[k] = gate.c * a0 - gate.s * a1;
        z1[k] = gate.s * a0 + gate.c * a1;
      }
    }
  }

  unitary_fft(z0, -1);
  unitary_fft(z1, -1);

  MeasurementDistribution dist{t, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    dist.probs[k] = std::norm(z0[k]) + std::norm(z1[k]);
  }
  return dist;
}

double parse_phase(const std::string& text) {
  const auto parse_integer = [](std::string_view part) -> std::uint64_t {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::domain_error("phase rational parts must be plain non-negative integers");
    }
    return value;
  };

  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::uint64_t num = parse_integer(std::string_view(text).substr(0, slash));
    const std::uint64_t den = parse_integer(std::string_view(text).substr(slash + 1));
    if (den == 0) throw std::domain_error("phase denominator must be nonzero");
    if (num >= den) throw std::domain_error("phase rational must lie in [0, 1)");
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::domain_error("phase is neither a decimal nor a num/den rational");
  }
  if (consumed != text.size()) {
    throw std::domain_error("trailing characters after phase value");
  }
  check_phi(value);
  return value;
}

}  // namespace qpe
