#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpe/register.hpp"

namespace qpe {

/// Phase split against the register lattice: phi = (b + a) / 2^t with b the
/// best lower t-bit integer, delta = phi - b/2^t the raw offset and
/// a = 2^t * delta the scaled offset in [0, 1). All fields are exact in
/// double precision (the decomposition only moves bits around).
struct PhaseDecomposition {
  double phi = 0.0;
  int t = 1;
  std::int64_t b = 0;
  double delta = 0.0;
  double a = 0.0;
};

/// t-qubit pure state, amplitudes indexed by the register basis.
struct StateVector {
  int t = 1;
  std::vector<std::complex<double>> amplitudes;
};

/// Probability vector over the 2^t register outcomes.
struct MeasurementDistribution {
  int t = 1;
  std::vector<double> probs;
};

/// Acceptance window: radius e in outcome indices (e = 2^{p-1} when derived
/// from a RegisterSpec) plus the convention fixing the summation limits.
struct WindowSpec {
  std::int64_t e = 1;
  WindowConvention convention = WindowConvention::Symmetric;
};

/// Acceptance window of a register spec: radius e = 2^{p-1}.
inline WindowSpec window_for(const RegisterSpec& spec, WindowConvention convention) {
  validate(spec);
  return {std::int64_t{1} << (spec.p - 1), convention};
}

/// Split phi in [0, 1) against a t-bit register. Throws std::domain_error
/// for phi outside [0, 1) or t < 1, budget_error for t over the closed-form cap.
PhaseDecomposition decompose_phase(double phi, int t);

/// State after the phase-kickback stage: amplitude_k = e^{2 pi i phi k} / 2^{t/2}.
StateVector stage1_state(int t, double phi);

/// Inverse Fourier transform, output_j = 2^{-t/2} sum_k e^{-2 pi i j k / 2^t} input_k.
/// Radix-2 in-place transform; unitary, so the norm is preserved.
StateVector inverse_qft(const StateVector& state);

/// Forward transform (adjoint of inverse_qft).
StateVector forward_qft(const StateVector& state);

/// Closed-form amplitude of outcome b + ell (window index ell relative to b,
/// applied modularly): x_{b+ell} = 2^{-t} (1 - e^{2 pi i 2^t delta}) /
/// (1 - e^{2 pi i (delta - ell/2^t)}). The removable singularity at
/// delta = ell/2^t returns 1 (point mass).
std::complex<double> amplitude_closed_form(const PhaseDecomposition& decomp,
                                           std::int64_t ell);

/// Full outcome distribution probs_k = |x_k|^2 from the closed form.
MeasurementDistribution distribution(int t, double phi);

/// Probability mass on outcomes (b + ell) mod 2^t for ell within the window.
/// Indices wrap modularly; a window covering the whole register returns the
/// total probability once.
double window_success_probability(const MeasurementDistribution& dist,
                                  const PhaseDecomposition& decomp,
                                  const WindowSpec& window);

/// End-to-end check case: runs phase estimation against a 2-d rotation
/// matrix U(phi) (counterclockwise by 2 pi phi, eigenvector (1, -i)/sqrt(2)
/// with eigenvalue e^{+2 pi i phi}), simulating the controlled-U^{2^j}
/// kickback ladder on the (t+1)-qubit composite state explicitly and then
/// transforming the measurement register. Agrees with distribution(t, phi)
/// elementwise.
MeasurementDistribution rotation_demo(const RegisterSpec& spec, double phi);

/// Parse a phase given as a decimal literal or a "num/den" rational.
/// Power-of-two denominators decompose exactly. Result must lie in [0, 1).
double parse_phase(const std::string& text);

namespace detail {

/// Closed-form distributions allocate 2^t probabilities.
inline constexpr int kMaxClosedFormQubits = 26;
/// Transform-path budget (inverse_qft, rotation_demo): O(t 2^t) work.
inline constexpr int kMaxTransformQubits = 20;

/// 2x2 rotation by 2 pi phi applied as U^power with the angle reduced
/// exactly modulo one turn.
struct RotationGate {
  double c = 1.0;
  double s = 0.0;
};
RotationGate rotation_power(double phi, double power);

}  // namespace detail

}  // namespace qpe
