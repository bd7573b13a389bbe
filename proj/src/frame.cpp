#include "tidfd/frame.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <set>

#include "tidfd/errors.hpp"

namespace tidfd {
namespace {

Signal multiply_inverse(const Spectrum& fh, const Spectrum& m, bool conjugate) {
  std::vector<Complex> prod(fh.size());
  for (std::size_t b = 0; b < prod.size(); ++b) prod[b] = (conjugate ? std::conj(m[b]) : m[b]) * fh[b];
  return from_spectrum(Spectrum(std::move(prod)));
}

std::vector<double> multiplier_energy(const MultiplierBank& bank) {
  std::vector<double> s(bank.grid_size(), 0.0);
  for (const Spectrum& m : bank.multipliers()) {
    for (std::size_t b = 0; b < s.size(); ++b) s[b] += std::norm(m[b]);
  }
  return s;
}

void require_same_labels(const std::vector<int>& a, const std::vector<int>& b, const char* where) {
  if (a != b) throw LabelMismatch(std::string(where) + ": label sets differ");
}

}  // namespace

// -------------------------------------------------------- MultiplierBank

MultiplierBank::MultiplierBank(std::vector<int> scales, std::vector<Spectrum> multipliers, bool dyadic)
    : scales_(std::move(scales)), multipliers_(std::move(multipliers)), dyadic_(dyadic) {
  if (scales_.empty()) throw DegenerateFrame("bank has no elements");
  if (scales_.size() != multipliers_.size()) throw LabelMismatch("one multiplier per label required");
  if (std::set<int>(scales_.begin(), scales_.end()).size() != scales_.size()) {
    throw LabelMismatch("duplicate labels");
  }
  for (const Spectrum& m : multipliers_) {
    if (m.size() != multipliers_.front().size()) throw SizeMismatch("bank multipliers differ in length");
  }
}

MultiplierBank MultiplierBank::scaled(double c) const {
  std::vector<Spectrum> ms;
  ms.reserve(size());
  for (const Spectrum& m : multipliers_) {
    std::vector<Complex> v(m.coeffs().begin(), m.coeffs().end());
    for (Complex& z : v) z *= c;
    ms.emplace_back(std::move(v));
  }
  return MultiplierBank(scales_, std::move(ms), dyadic_);
}

// ----------------------------------------------------- CoefficientFamily

CoefficientFamily::CoefficientFamily(std::vector<int> labels, std::vector<Signal> coeffs)
    : labels_(std::move(labels)), coeffs_(std::move(coeffs)) {
  if (labels_.size() != coeffs_.size()) throw LabelMismatch("one coefficient signal per label required");
  for (const Signal& c : coeffs_) {
    if (c.size() != coeffs_.front().size()) throw SizeMismatch("coefficient signals differ in length");
  }
}

double inner(const CoefficientFamily& c, const CoefficientFamily& d) {
  require_same_labels(c.labels(), d.labels(), "inner");
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += inner(c[i], d[i]);
  return s;
}

double norm(const CoefficientFamily& c) { return std::sqrt(inner(c, c)); }

// ------------------------------------------------------ frame operators

CoefficientFamily analysis(const MultiplierBank& bank, const Signal& f) {
  if (bank.grid_size() != f.size()) throw SizeMismatch("analysis: bank and signal lengths differ");
  const Spectrum fh = to_spectrum(f);
  std::vector<Signal> out;
  out.reserve(bank.size());
  for (const Spectrum& m : bank.multipliers()) out.push_back(multiply_inverse(fh, m, true));
  return CoefficientFamily(bank.scales(), std::move(out));
}

Signal synthesis(const MultiplierBank& bank, const CoefficientFamily& c) {
  require_same_labels(bank.scales(), c.labels(), "synthesis");
  if (c[0].size() != bank.grid_size()) throw SizeMismatch("synthesis: bank and coefficient lengths differ");
  std::vector<Complex> acc(bank.grid_size());
  for (std::size_t l = 0; l < bank.size(); ++l) {
    const Spectrum ch = to_spectrum(c[l]);
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += bank[l][b] * ch[b];
  }
  return from_spectrum(Spectrum(std::move(acc)));
}

FrameBounds frame_bounds(const MultiplierBank& bank, bool exclude_dc) {
  const std::vector<double> s = multiplier_energy(bank);
  const auto first = s.begin() + (exclude_dc ? 1 : 0);
  const auto [lo, hi] = std::minmax_element(first, s.end());
  if (*lo <= 1e-14) {
    throw DegenerateFrame("multiplier energy vanishes at frequency " +
                          std::to_string(Spectrum::frequency_of_bin(lo - s.begin(), s.size())));
  }
  return {*lo, *hi};
}

MultiplierBank canonical_dual(const MultiplierBank& bank) {
  frame_bounds(bank, true);
  const std::vector<double> s = multiplier_energy(bank);
  std::vector<Spectrum> duals;
  duals.reserve(bank.size());
  for (const Spectrum& m : bank.multipliers()) {
    std::vector<Complex> w(m.size());
    for (std::size_t b = 1; b < w.size(); ++b) w[b] = m[b] / s[b];
    duals.emplace_back(std::move(w));
  }
  return MultiplierBank(bank.scales(), std::move(duals), bank.dyadic());
}

double verify_dual(const MultiplierBank& u_bank, const MultiplierBank& w_bank) {
  require_same_labels(u_bank.scales(), w_bank.scales(), "verify_dual");
  if (u_bank.grid_size() != w_bank.grid_size()) throw SizeMismatch("verify_dual: grid sizes differ");
  double worst = 0.0;
  for (std::size_t b = 1; b < u_bank.grid_size(); ++b) {
    Complex sum = 0.0;
    for (std::size_t l = 0; l < u_bank.size(); ++l) sum += w_bank[l][b] * std::conj(u_bank[l][b]);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double operator_norm(const MultiplierBank& bank) {
  const std::vector<double> s = multiplier_energy(bank);
  return std::sqrt(*std::max_element(s.begin(), s.end()));
}

// ------------------------------------------------------------ generators

MultiplierBank shannon_bank(std::size_t n, int j_min) {
  if (!is_power_of_two(n) || n < 8) throw BadScaleRange("grid size must be a power of two >= 8");
  const int levels = log2_exact(n);
  if (j_min < 1 || j_min > levels - 1) {
    throw BadScaleRange("j_min must lie in [1, " + std::to_string(levels - 1) + "]");
  }
  std::vector<int> scales;
  std::vector<Spectrum> ms;
  for (int j = j_min; j <= levels - 1; ++j) {
    const int lo = (j == j_min) ? 1 : (1 << (j - 1));
    const int hi = 1 << j;
    const bool finest = (j == levels - 1);
    scales.push_back(j);
    ms.push_back(Spectrum::from_frequency(n, [&](int k) -> Complex {
      const int a = std::abs(k);
      return (a >= lo && a < hi) || (finest && a == static_cast<int>(n / 2)) ? 1.0 : 0.0;
    }));
  }
  return MultiplierBank(std::move(scales), std::move(ms), true);
}

double meyer_transition(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * t * (35.0 - 84.0 * t + 70.0 * t * t - 20.0 * t * t * t);
}

namespace {

double meyer_profile(double s) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (s <= 1.0 / 3.0 || s >= 4.0 / 3.0) return 0.0;
  if (s <= 2.0 / 3.0) return std::sin(half_pi * meyer_transition(3.0 * s - 1.0));
  return std::cos(half_pi * meyer_transition(1.5 * s - 1.0));
}

}  // namespace

MultiplierBank meyer_bank(std::size_t n) {
  if (!is_power_of_two(n) || n < 8) throw BadScaleRange("grid size must be a power of two >= 8");
  const int levels = log2_exact(n);
  const int coarsest = 1;
  const int finest = levels - 1;
  std::vector<int> scales;
  std::vector<Spectrum> ms;
  for (int j = coarsest; j <= finest; ++j) {
    // Dilates j' <= coarsest fold into the coarsest band, j' >= finest into
    // the finest. |k| <= N/2 only reaches dilates in [-2, levels + 1].
    const int from = (j == coarsest) ? -2 : j;
    const int to = (j == finest) ? levels + 1 : j;
    scales.push_back(j);
    ms.push_back(Spectrum::from_frequency(n, [&](int k) -> Complex {
      if (k == 0) return 0.0;
      double e = 0.0;
      for (int jj = from; jj <= to; ++jj) {
        const double p = meyer_profile(std::abs(k) / std::ldexp(1.0, jj));
        e += p * p;
      }
      return std::sqrt(e);
    }));
  }
  return MultiplierBank(std::move(scales), std::move(ms), true);
}

// ------------------------------------------------------------- decimated

std::size_t decimation_stride(const Spectrum& multiplier) {
  const std::size_t n = multiplier.size();
  int kmax = 0;
  for (std::size_t b = 0; b < n; ++b) {
    if (multiplier[b] != Complex{}) kmax = std::max(kmax, std::abs(Spectrum::frequency_of_bin(b, n)));
  }
  std::size_t samples = 1;
  while (samples <= static_cast<std::size_t>(2 * kmax)) samples *= 2;
  return std::max<std::size_t>(1, n / std::min(samples, n));
}

DecimatedCoefficients decimated_analysis(const MultiplierBank& bank, const Signal& f) {
  if (!bank.dyadic()) throw NonDyadicBank("decimated transform needs a dyadic bank");
  const CoefficientFamily c = analysis(bank, f);
  DecimatedCoefficients d{f.size(), {}};
  for (std::size_t l = 0; l < bank.size(); ++l) {
    const std::size_t stride = decimation_stride(bank[l]);
    std::vector<double> samples;
    samples.reserve(f.size() / stride);
    for (std::size_t i = 0; i < f.size(); i += stride) samples.push_back(c[l][i]);
    d.scales.push_back({bank.scales()[l], stride, std::move(samples)});
  }
  return d;
}

Signal decimated_synthesis(const MultiplierBank& bank, const DecimatedCoefficients& d) {
  if (!bank.dyadic()) throw NonDyadicBank("decimated transform needs a dyadic bank");
  if (d.n != bank.grid_size()) throw SizeMismatch("decimated_synthesis: grid sizes differ");
  if (d.scales.size() != bank.size()) throw LabelMismatch("decimated_synthesis: scale count differs");
  std::vector<Complex> acc(bank.grid_size());
  for (std::size_t l = 0; l < bank.size(); ++l) {
    const DecimatedScale& ds = d.scales[l];
    if (ds.scale != bank.scales()[l]) throw LabelMismatch("decimated_synthesis: scale labels differ");
    const std::size_t stride = decimation_stride(bank[l]);
    if (ds.stride != stride || ds.samples.size() * stride != d.n) {
      throw StrideMismatch("scale " + std::to_string(ds.scale) + ": expected stride " + std::to_string(stride));
    }
    std::vector<double> up(d.n, 0.0);
    for (std::size_t m = 0; m < ds.samples.size(); ++m) up[m * stride] = static_cast<double>(stride) * ds.samples[m];
    const Spectrum uh = to_spectrum(Signal(std::move(up)));
    for (std::size_t b = 0; b < acc.size(); ++b) acc[b] += bank[l][b] * uh[b];
  }
  return from_spectrum(Spectrum(std::move(acc)));
}

void write_bank_csv(std::ostream& os, const MultiplierBank& bank) {
  os << "scale,k,re,im\n";
  char buf[128];
  const std::size_t n = bank.grid_size();
  for (std::size_t l = 0; l < bank.size(); ++l) {
    for (int k = -static_cast<int>(n / 2); k < static_cast<int>(n / 2); ++k) {
      const Complex z = bank[l].at(k);
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", bank.scales()[l], k, z.real(), z.imag());
      os << buf;
    }
  }
}

}  // namespace tidfd
