#pragma once

// Fourier-diagonal forward operators f -> F^{-1}(m F f).

#include <cstddef>
#include <iosfwd>

#include "tidfd/signal.hpp"

namespace tidfd {

class DiagonalOperator {
 public:
  /// With `requires_zero_mean`, the multiplier must vanish at DC and at the
  /// Nyquist bin and the operator only accepts admissible signals (see
  /// project_admissible). A real signal's Nyquist coefficient is real, so an
  /// odd multiplier such as 1/(iw) can only act on it as zero.
  DiagonalOperator(Spectrum multiplier, bool requires_zero_mean);

  const Spectrum& multiplier() const { return multiplier_; }
  bool requires_zero_mean() const { return requires_zero_mean_; }
  std::size_t size() const { return multiplier_.size(); }
  /// max_k |m(k)|
  double norm() const { return multiplier_.max_abs(); }

 private:
  Spectrum multiplier_;
  bool requires_zero_mean_;
};

/// Primitive on the torus: m(k) = 1/(i w_k) for k != 0, zero at DC and Nyquist.
DiagonalOperator integration_op(std::size_t n);
/// m(k) = i w_k, zero at DC and Nyquist.
DiagonalOperator differentiation_op(std::size_t n);
DiagonalOperator identity_op(std::size_t n);

/// F^{-1}(m F f). Throws DomainViolation when the operator requires an
/// admissible signal and f is not one; callers project explicitly.
Signal apply(const DiagonalOperator& op, const Signal& f);

/// Multiplier conj(m). For integration this is -m.
DiagonalOperator adjoint(const DiagonalOperator& op);

/// Multiplier 1/m off the excluded bins (DC and Nyquist for restricted
/// operators); throws SingularMultiplier if m vanishes elsewhere.
DiagonalOperator unstable_inverse(const DiagonalOperator& op);

/// CSV rows `k,re,im` of the multiplier.
void write_operator_csv(std::ostream& os, const DiagonalOperator& op);

}  // namespace tidfd
