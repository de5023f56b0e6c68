#pragma once

#include <cstdint>
#include <stdexcept>

namespace qpe {

/// Measurement-register sizing: s bits of desired accuracy plus p guard
/// qubits, for a register of t = s + p qubits in total.
struct RegisterSpec {
  int s = 1;  ///< desired accuracy bits, >= 1
  int p = 1;  ///< guard qubits, >= 1

  int t() const { return s + p; }
};

inline void validate(const RegisterSpec& spec) {
  if (spec.s < 1 || spec.p < 1) {
    throw std::domain_error("register spec requires s >= 1 and p >= 1");
  }
}

/// Which register outcomes count as a successful estimate.
///
/// Symmetric centers the accepted window on the true phase (2^p outcomes,
/// summation indices -2^{p-1}+1 .. 2^{p-1}); Asymmetric centers it on the
/// truncated register value (2^p + 1 outcomes, -2^{p-1} .. 2^{p-1}).
enum class WindowConvention { Symmetric, Asymmetric };

struct WindowLimits {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Summation limits for acceptance radius e under the given convention.
inline WindowLimits window_limits(WindowConvention convention, std::int64_t e) {
  if (e < 1) throw std::domain_error("window radius e must be >= 1");
  return {convention == WindowConvention::Symmetric ? -e + 1 : -e, e};
}

}  // namespace qpe
