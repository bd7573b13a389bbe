#include "tidfd/dfd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "tidfd/errors.hpp"

namespace tidfd {

namespace detail {

void require_dual(const MultiplierBank& u_bank, const MultiplierBank& w_bank) {
  const double residual = verify_dual(u_bank, w_bank);
  if (residual > 1e-10) throw DualMismatch("dual residual " + std::to_string(residual) + " exceeds 1e-10");
}

void require_admissible(const Signal& g, const char* where) {
  if (!is_admissible(g)) throw DomainViolation(std::string(where) + ": data must be admissible (zero DC and Nyquist)");
}

}  // namespace detail

TIDFD::TIDFD(MultiplierBank u_bank, MultiplierBank v_bank, std::vector<double> kappas)
    : u_bank_(std::move(u_bank)), v_bank_(std::move(v_bank)), kappas_(std::move(kappas)) {
  if (u_bank_.scales() != v_bank_.scales()) throw LabelMismatch("u and v banks carry different labels");
  if (kappas_.size() != u_bank_.size()) throw LabelMismatch("one quasi-singular value per label required");
  if (u_bank_.grid_size() != v_bank_.grid_size()) throw SizeMismatch("u and v banks differ in grid size");
  for (double k : kappas_) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DegenerateFrame("quasi-singular values must lie in (0, inf)");
  }
}

TIDFD TIDFD::with_kappas(std::vector<double> kappas) const { return TIDFD(u_bank_, v_bank_, std::move(kappas)); }

BandEnvelope band_envelope(const MultiplierBank& u_bank) {
  const std::size_t n = u_bank.grid_size();
  double a = std::numeric_limits<double>::infinity();
  double b = 0.0;
  for (std::size_t l = 0; l < u_bank.size(); ++l) {
    const double scale = std::ldexp(1.0, -u_bank.scales()[l]);
    for (std::size_t bin = 0; bin < n; ++bin) {
      if (u_bank[l][bin] == Complex{}) continue;
      const double w = scale * std::abs(angular_frequency(Spectrum::frequency_of_bin(bin, n)));
      a = std::min(a, w);
      b = std::max(b, w);
    }
  }
  return {a, b};
}

TIDFD build_ti_wvd(const MultiplierBank& u_bank) {
  if (!u_bank.dyadic()) throw NonDyadicBank("TI-WVD needs a bank labelled by dyadic scales");
  frame_bounds(u_bank, true);
  const BandEnvelope env = band_envelope(u_bank);
  if (!(env.a > 0.0)) throw UnboundedVaguelette("a band reaches DC; 2^{-j}|w| is not bounded away from 0");
  const std::size_t n = u_bank.grid_size();
  std::vector<double> kappas;
  std::vector<Spectrum> vs;
  for (std::size_t l = 0; l < u_bank.size(); ++l) {
    const double kappa = std::ldexp(1.0, -u_bank.scales()[l]);
    kappas.push_back(kappa);
    std::vector<Complex> v(n);
    for (std::size_t bin = 0; bin < n; ++bin) {
      const double w = angular_frequency(Spectrum::frequency_of_bin(bin, n));
      v[bin] = kappa * Complex(0.0, -w) * u_bank[l][bin];
    }
    vs.emplace_back(std::move(v));
  }
  return TIDFD(u_bank, MultiplierBank(u_bank.scales(), std::move(vs), true), std::move(kappas));
}

TIDFDReport verify_tidfd(const TIDFD& dfd, const DiagonalOperator& op, int trials, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("verify_tidfd needs at least one trial");
  if (op.size() != dfd.grid_size()) throw SizeMismatch("operator and TI-DFD grid sizes differ");
  TIDFDReport report{frame_bounds(dfd.u_bank(), true), frame_bounds(dfd.v_bank(), true), 0.0};
  for (int t = 0; t < trials; ++t) {
    const Signal f = project_admissible(add_white_noise(Signal::zeros(dfd.grid_size()), 1.0, seed + t));
    const CoefficientFamily lhs = analysis(dfd.v_bank(), apply(op, f));
    const CoefficientFamily uf = analysis(dfd.u_bank(), f);
    for (std::size_t l = 0; l < dfd.size(); ++l) {
      const Signal rhs = dfd.kappas()[l] * uf[l];
      const double denom = l2_norm(rhs);
      if (denom == 0.0) continue;
      report.ti3_residual = std::max(report.ti3_residual, l2_norm(lhs[l] - rhs) / denom);
    }
  }
  return report;
}

Signal exact_inverse(const TIDFD& dfd, const MultiplierBank& w_bank, const Signal& g) {
  detail::require_dual(dfd.u_bank(), w_bank);
  detail::require_admissible(g, "exact_inverse");
  const CoefficientFamily d = analysis(dfd.v_bank(), g);
  std::vector<Signal> c;
  for (std::size_t l = 0; l < dfd.size(); ++l) c.push_back((1.0 / dfd.kappas()[l]) * d[l]);
  return synthesis(w_bank, CoefficientFamily(dfd.scales(), std::move(c)));
}

IllPosednessReport illposedness_report(const TIDFD& dfd) {
  const auto [lo, hi] = std::minmax_element(dfd.kappas().begin(), dfd.kappas().end());
  double v_min = std::numeric_limits<double>::infinity();
  for (const Spectrum& v : dfd.v_bank().multipliers()) v_min = std::min(v_min, v.max_abs());
  const bool ill = *lo <= kIllPosedRatio * *hi && v_min > 0.0;
  return {*lo, *hi, v_min, ill ? Verdict::ill_posed : Verdict::bounded};
}

double source_norm(const TIDFD& dfd, const Signal& f, double mu) {
  const CoefficientFamily c = analysis(dfd.u_bank(), f);
  double s = 0.0;
  for (std::size_t l = 0; l < dfd.size(); ++l) {
    const double e = l2_norm(c[l]);
    s += std::pow(dfd.kappas()[l], -4.0 * mu) * e * e;
  }
  return std::sqrt(s);
}

void write_kappa_csv(std::ostream& os, const TIDFD& dfd) {
  os << "scale,kappa\n";
  char buf[64];
  for (std::size_t l = 0; l < dfd.size(); ++l) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", dfd.scales()[l], dfd.kappas()[l]);
    os << buf;
  }
}

}  // namespace tidfd
