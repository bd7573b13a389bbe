#include "tidfd/operator.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "tidfd/errors.hpp"

namespace tidfd {
namespace {

bool excluded_bin(std::size_t bin, std::size_t n, bool restricted) {
  return restricted && (bin == 0 || bin == n / 2);
}

}  // namespace

DiagonalOperator::DiagonalOperator(Spectrum multiplier, bool requires_zero_mean)
    : multiplier_(std::move(multiplier)), requires_zero_mean_(requires_zero_mean) {
  if (requires_zero_mean_ && (multiplier_[0] != Complex{} || multiplier_[size() / 2] != Complex{})) {
    throw DomainViolation("restricted operator must vanish at DC and Nyquist");
  }
}

DiagonalOperator integration_op(std::size_t n) {
  Spectrum m = Spectrum::from_frequency(n, [n](int k) -> Complex {
    if (k == 0 || k == -static_cast<int>(n / 2)) return 0.0;
    return 1.0 / Complex(0.0, angular_frequency(k));
  });
  return DiagonalOperator(std::move(m), true);
}

DiagonalOperator differentiation_op(std::size_t n) {
  Spectrum m = Spectrum::from_frequency(n, [n](int k) -> Complex {
    if (k == -static_cast<int>(n / 2)) return 0.0;
    return Complex(0.0, angular_frequency(k));
  });
  return DiagonalOperator(std::move(m), true);
}

DiagonalOperator identity_op(std::size_t n) {
  return DiagonalOperator(Spectrum::from_frequency(n, [](int) { return Complex(1.0); }), false);
}

Signal apply(const DiagonalOperator& op, const Signal& f) {
  if (op.size() != f.size()) throw SizeMismatch("apply: operator and signal lengths differ");
  if (op.requires_zero_mean() && !is_admissible(f)) {
    throw DomainViolation("signal has a DC or Nyquist component; project it first");
  }
  return ti_convolve(op.multiplier(), f, false);
}

DiagonalOperator adjoint(const DiagonalOperator& op) {
  std::vector<Complex> m(op.multiplier().coeffs().begin(), op.multiplier().coeffs().end());
  for (Complex& z : m) z = std::conj(z);
  return DiagonalOperator(Spectrum(std::move(m)), op.requires_zero_mean());
}

DiagonalOperator unstable_inverse(const DiagonalOperator& op) {
  const std::size_t n = op.size();
  std::vector<Complex> m(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (excluded_bin(b, n, op.requires_zero_mean())) continue;
    if (op.multiplier()[b] == Complex{}) {
      throw SingularMultiplier("multiplier vanishes at k = " + std::to_string(Spectrum::frequency_of_bin(b, n)));
    }
    m[b] = 1.0 / op.multiplier()[b];
  }
  return DiagonalOperator(Spectrum(std::move(m)), op.requires_zero_mean());
}

void write_operator_csv(std::ostream& os, const DiagonalOperator& op) {
  os << "k,re,im\n";
  char buf[96];
  const int half = static_cast<int>(op.size() / 2);
  for (int k = -half; k < half; ++k) {
    const Complex z = op.multiplier().at(k);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", k, z.real(), z.imag());
    os << buf;
  }
}

}  // namespace tidfd
