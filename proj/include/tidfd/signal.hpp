#pragma once

// Discrete periodic signal model on the torus [0,1) with N = 2^L samples.
//
// Fourier convention: coeffs(k) = (1/N) sum_i f(x_i) exp(-i w_k x_i) with
// w_k = 2 pi k and k in {-N/2, ..., N/2-1}. Under this normalization Parseval
// holds without weights: l2_norm(f)^2 = sum_k |coeffs(k)|^2, where l2_norm is
// the (1/N)-weighted discrete norm.
//
// Spectra are stored in FFT order: bin b holds frequency k = b for b < N/2 and
// k = b - N for b >= N/2. The Nyquist bin b = N/2 holds k = -N/2.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tidfd {

using Complex = std::complex<double>;

/// Real samples f(i/N), i = 0..N-1, with N a power of two and N >= 8.
class Signal {
 public:
  explicit Signal(std::vector<double> values);

  static Signal zeros(std::size_t n);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double x(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(size()); }

  double mean() const;

  Signal& operator+=(const Signal& other);
  Signal& operator-=(const Signal& other);
  Signal& operator*=(double c);

 private:
  std::vector<double> values_;
};

Signal operator+(Signal a, const Signal& b);
Signal operator-(Signal a, const Signal& b);
Signal operator*(double c, Signal a);

/// Fourier coefficients in FFT order. `real_signal` marks spectra of real
/// signals; such spectra are checked for conjugate symmetry on construction.
class Spectrum {
 public:
  Spectrum(std::vector<Complex> coeffs, bool real_signal = false);

  static Spectrum zeros(std::size_t n, bool real_signal = false);

  /// Builds a spectrum from a function of the integer frequency k.
  template <class F>
  static Spectrum from_frequency(std::size_t n, F&& value, bool real_signal = false) {
    std::vector<Complex> c(n);
    for (std::size_t b = 0; b < n; ++b) c[b] = value(frequency_of_bin(b, n));
    return Spectrum(std::move(c), real_signal);
  }

  std::size_t size() const { return coeffs_.size(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  bool real_signal() const { return real_signal_; }

  Complex operator[](std::size_t bin) const { return coeffs_[bin]; }
  /// Coefficient at integer frequency k in [-N/2, N/2).
  Complex at(int k) const { return coeffs_[bin_of_frequency(k, size())]; }

  /// sqrt(sum_k |coeffs(k)|^2)
  double norm() const;
  /// max_k |coeffs(k)|
  double max_abs() const;

  static int frequency_of_bin(std::size_t bin, std::size_t n);
  static std::size_t bin_of_frequency(int k, std::size_t n);

 private:
  std::vector<Complex> coeffs_;
  bool real_signal_;
};

inline double angular_frequency(int k) { return 2.0 * 3.14159265358979323846 * k; }

bool is_power_of_two(std::size_t n);
/// log2(n) for a power of two.
int log2_exact(std::size_t n);

Spectrum to_spectrum(const Signal& f);
/// Inverse DFT. Throws SymmetryViolation if the imaginary residue exceeds
/// 1e-10 * s.norm().
Signal from_spectrum(const Spectrum& s);

/// sqrt((1/N) sum_i f_i^2)
double l2_norm(const Signal& f);
/// (1/N) sum_i f_i g_i
double inner(const Signal& f, const Signal& g);

/// adjoint: F^{-1}(conj(u) F f), the correlation u* * f.
/// otherwise: F^{-1}(u F f), the convolution u * f.
Signal ti_convolve(const Spectrum& u, const Signal& f, bool adjoint);

/// f + eta with eta i.i.d. N(0, sigma^2) per sample, deterministic in seed.
Signal add_white_noise(const Signal& f, double sigma, std::uint64_t seed);

/// Circular shift: result(x_i) = f(x_{i-m}).
Signal shift(const Signal& f, long m);

/// Removes the DC and Nyquist coefficients. The result lies in the domain of
/// the integration operator (the discrete analogue of zero-integral functions).
Signal project_admissible(const Signal& f);
/// True if |mean| and |Nyquist coefficient| are at most tol * l2_norm(f).
bool is_admissible(const Signal& f, double tol = 1e-12);

/// CSV with header `index,x,value` and 17 significant digits.
void write_csv(std::ostream& os, const Signal& f);
Signal read_csv(std::istream& is);

}  // namespace tidfd
