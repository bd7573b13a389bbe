#include "tidfd/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "fft.hpp"
#include "tidfd/errors.hpp"

namespace tidfd {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  int l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

// ---------------------------------------------------------------- Signal

Signal::Signal(std::vector<double> values) : values_(std::move(values)) {
  if (!is_power_of_two(values_.size()) || values_.size() < 8) {
    throw InvalidSignal("length " + std::to_string(values_.size()) + " is not a power of two >= 8");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidSignal("non-finite sample");
  }
}

Signal Signal::zeros(std::size_t n) { return Signal(std::vector<double>(n, 0.0)); }

double Signal::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(size());
}

Signal& Signal::operator+=(const Signal& other) {
  if (other.size() != size()) throw SizeMismatch("signal addition");
  for (std::size_t i = 0; i < size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Signal& Signal::operator-=(const Signal& other) {
  if (other.size() != size()) throw SizeMismatch("signal subtraction");
  for (std::size_t i = 0; i < size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Signal& Signal::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

Signal operator+(Signal a, const Signal& b) { return a += b; }
Signal operator-(Signal a, const Signal& b) { return a -= b; }
Signal operator*(double c, Signal a) { return a *= c; }

// -------------------------------------------------------------- Spectrum

Spectrum::Spectrum(std::vector<Complex> coeffs, bool real_signal)
    : coeffs_(std::move(coeffs)), real_signal_(real_signal) {
  if (!is_power_of_two(coeffs_.size()) || coeffs_.size() < 8) {
    throw InvalidSignal("spectrum length " + std::to_string(coeffs_.size()) + " is not a power of two >= 8");
  }
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InvalidSignal("non-finite coefficient");
  }
  if (real_signal_) {
    const std::size_t n = coeffs_.size();
    const double tol = 1e-12 * std::max(norm(), 1e-300);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t mirror = (n - b) % n;
      if (std::abs(coeffs_[b] - std::conj(coeffs_[mirror])) > tol) {
        throw SymmetryViolation("spectrum flagged real is not conjugate symmetric at bin " + std::to_string(b));
      }
    }
  }
}

Spectrum Spectrum::zeros(std::size_t n, bool real_signal) {
  return Spectrum(std::vector<Complex>(n), real_signal);
}

double Spectrum::norm() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

int Spectrum::frequency_of_bin(std::size_t bin, std::size_t n) {
  return bin < n / 2 ? static_cast<int>(bin) : static_cast<int>(bin) - static_cast<int>(n);
}

std::size_t Spectrum::bin_of_frequency(int k, std::size_t n) {
  const long nn = static_cast<long>(n);
  return static_cast<std::size_t>(((k % nn) + nn) % nn);
}

// ------------------------------------------------------------ transforms

Spectrum to_spectrum(const Signal& f) {
  const std::size_t n = f.size();
  std::vector<Complex> in(f.values().begin(), f.values().end());
  std::vector<Complex> out(n);
  detail::fft_forward(in, out);
  const double scale = 1.0 / static_cast<double>(n);
  for (Complex& c : out) c *= scale;
  // Exact symmetry: rounding in the FFT can leave ~1e-17 asymmetries.
  for (std::size_t b = 1; b < n / 2; ++b) {
    const Complex avg = 0.5 * (out[b] + std::conj(out[n - b]));
    out[b] = avg;
    out[n - b] = std::conj(avg);
  }
  out[0] = out[0].real();
  out[n / 2] = out[n / 2].real();
  return Spectrum(std::move(out), true);
}

Signal from_spectrum(const Spectrum& s) {
  const std::size_t n = s.size();
  std::vector<Complex> out(n);
  detail::fft_backward(s.coeffs(), out);
  const double tol = 1e-10 * s.norm();
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(out[i].imag()) > tol) {
      throw SymmetryViolation("imaginary residue " + std::to_string(std::abs(out[i].imag())) +
                              " exceeds 1e-10 * |s|");
    }
    values[i] = out[i].real();
  }
  return Signal(std::move(values));
}

double inner(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) throw SizeMismatch("inner product");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s / static_cast<double>(f.size());
}

double l2_norm(const Signal& f) { return std::sqrt(inner(f, f)); }

Signal ti_convolve(const Spectrum& u, const Signal& f, bool adjoint) {
  if (u.size() != f.size()) throw SizeMismatch("ti_convolve: multiplier and signal lengths differ");
  const Spectrum fh = to_spectrum(f);
  std::vector<Complex> prod(f.size());
  for (std::size_t b = 0; b < prod.size(); ++b) {
    prod[b] = (adjoint ? std::conj(u[b]) : u[b]) * fh[b];
  }
  return from_spectrum(Spectrum(std::move(prod)));
}

Signal add_white_noise(const Signal& f, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw InvalidSignal("noise level must be non-negative");
  if (sigma == 0.0) return f;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sigma);
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x += normal(rng);
  return Signal(std::move(v));
}

Signal shift(const Signal& f, long m) {
  const long n = static_cast<long>(f.size());
  std::vector<double> v(f.size());
  for (long i = 0; i < n; ++i) v[i] = f[static_cast<std::size_t>((((i - m) % n) + n) % n)];
  return Signal(std::move(v));
}

namespace {

// Nyquist coefficient (1/N) sum_i (-1)^i f_i.
double nyquist_coefficient(const Signal& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0 ? f[i] : -f[i]);
  return s / static_cast<double>(f.size());
}

}  // namespace

Signal project_admissible(const Signal& f) {
  const double dc = f.mean();
  const double nyq = nyquist_coefficient(f);
  std::vector<double> v(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dc + (i % 2 == 0 ? nyq : -nyq);
  return Signal(std::move(v));
}

bool is_admissible(const Signal& f, double tol) {
  const double bound = tol * l2_norm(f);
  return std::abs(f.mean()) <= bound && std::abs(nyquist_coefficient(f)) <= bound;
}

// ------------------------------------------------------------------ CSV

void write_csv(std::ostream& os, const Signal& f) {
  os << "index,x,value\n";
  char buf[96];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, f.x(i), f[i]);
    os << buf;
  }
}

Signal read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("index,x,value", 0) != 0) {
    throw InvalidSignal("signal CSV must start with header index,x,value");
  }
  std::vector<double> values;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    std::stringstream ss(line);
    std::string idx, x, value;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, x, ',') || !std::getline(ss, value)) {
      throw InvalidSignal("malformed CSV row: " + line);
    }
    if (std::stoul(idx) != values.size()) throw InvalidSignal("CSV indices must be consecutive from 0");
    values.push_back(std::stod(value));
  }
  return Signal(std::move(values));
}

}  // namespace tidfd
