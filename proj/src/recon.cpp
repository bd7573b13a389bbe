#include "tidfd/recon.hpp"

#include <algorithm>
#include <cmath>

#include "tidfd/errors.hpp"

namespace tidfd {
namespace {

double threshold_for(int scale, double beta) { return std::ldexp(beta, -scale); }

std::size_t label_index(const TIDFD& dfd, int scale) {
  const auto& s = dfd.scales();
  const auto it = std::find(s.begin(), s.end(), scale);
  if (it == s.end()) throw BadScaleRange("scale " + std::to_string(scale) + " is not in the bank");
  return static_cast<std::size_t>(it - s.begin());
}

}  // namespace

CoefficientFamily vaguelette_coefficients(const TIDFD& dfd, const Signal& g, VagueletteRoute route) {
  if (route == VagueletteRoute::spectral) return analysis(dfd.v_bank(), g);
  const CoefficientFamily u = analysis(dfd.u_bank(), g);
  const DiagonalOperator d = differentiation_op(g.size());
  std::vector<Signal> out;
  for (std::size_t l = 0; l < dfd.size(); ++l) out.push_back(dfd.kappas()[l] * apply(d, u[l]));
  return CoefficientFamily(dfd.scales(), std::move(out));
}

ReconstructionReport filtered_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, const FilterSpec& filter,
                                          double alpha, const Signal& g, VagueletteRoute route) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw BadAlpha("alpha must be positive and finite");
  detail::require_dual(dfd.u_bank(), w_bank);
  detail::require_admissible(g, "filtered_reconstruct");
  const CoefficientFamily d = vaguelette_coefficients(dfd, g, route);
  std::vector<Signal> c;
  std::vector<double> energy;
  for (std::size_t l = 0; l < dfd.size(); ++l) {
    c.push_back(filter(alpha, dfd.kappas()[l]) * d[l]);
    energy.push_back(l2_norm(c.back()));
  }
  Signal f = synthesis(w_bank, CoefficientFamily(dfd.scales(), std::move(c)));
  const double bound = sup_norm(filter, alpha) * operator_norm(w_bank) * operator_norm(dfd.v_bank());
  return {std::move(f), alpha, filter.name, std::move(energy), bound};
}

Signal thresholded_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, double beta, const Signal& g) {
  if (!(beta >= 0.0)) throw BadAlpha("beta must be non-negative");
  detail::require_dual(dfd.u_bank(), w_bank);
  detail::require_admissible(g, "thresholded_reconstruct");
  const CoefficientFamily d = analysis(dfd.v_bank(), g);
  std::vector<Signal> c;
  for (std::size_t l = 0; l < dfd.size(); ++l) {
    c.push_back((1.0 / dfd.kappas()[l]) * soft_threshold(threshold_for(dfd.scales()[l], beta), d[l]));
  }
  return synthesis(w_bank, CoefficientFamily(dfd.scales(), std::move(c)));
}

Signal decimated_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, DecimatedMode mode, const Signal& g) {
  if (mode.kind == DecimatedMode::Kind::tikhonov && !(mode.parameter > 0.0)) {
    throw BadAlpha("alpha must be positive");
  }
  if (mode.kind == DecimatedMode::Kind::soft && !(mode.parameter >= 0.0)) {
    throw BadAlpha("beta must be non-negative");
  }
  detail::require_dual(dfd.u_bank(), w_bank);
  detail::require_admissible(g, "decimated_reconstruct");
  DecimatedCoefficients d = decimated_analysis(dfd.v_bank(), g);
  const FilterSpec tikhonov = tikhonov_filter();
  for (std::size_t l = 0; l < dfd.size(); ++l) {
    const double kappa = dfd.kappas()[l];
    for (double& x : d.scales[l].samples) {
      if (mode.kind == DecimatedMode::Kind::tikhonov) {
        x *= tikhonov(mode.parameter, kappa);
      } else {
        x = soft_threshold(threshold_for(d.scales[l].scale, mode.parameter), x) / kappa;
      }
    }
  }
  return decimated_synthesis(w_bank, d);
}

double a_priori_alpha(double delta, double rho, double mu, double c) {
  if (!(delta > 0.0 && rho > 0.0 && mu > 0.0 && c > 0.0)) {
    throw BadAlpha("a-priori rule needs positive delta, rho, mu and c");
  }
  return c * std::pow(delta / rho, 2.0 / (2.0 * mu + 1.0));
}

WorstCaseProbe worst_case_probe(const TIDFD& dfd, const DiagonalOperator& op, double mu, double rho, int scale) {
  const MultiplierBank& u = dfd.u_bank();
  const std::size_t n = u.grid_size();
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      for (std::size_t bin = 0; bin < n; ++bin) {
        if (u[a][bin] != Complex{} && u[b][bin] != Complex{}) {
          throw BandOverlap("scales " + std::to_string(u.scales()[a]) + " and " + std::to_string(u.scales()[b]) +
                            " share frequency " + std::to_string(Spectrum::frequency_of_bin(bin, n)));
        }
      }
    }
  }
  const std::size_t l = label_index(dfd, scale);
  int k_low = 0;
  for (int k = 1; k < static_cast<int>(n / 2); ++k) {
    if (u[l].at(k) != Complex{}) {
      k_low = k;
      break;
    }
  }
  if (k_low == 0) throw DegenerateFrame("band " + std::to_string(scale) + " has no admissible frequency");

  const double gain = std::abs(u[l].at(k_low));
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = std::sqrt(2.0) * std::cos(angular_frequency(k_low) * static_cast<double>(i) / static_cast<double>(n)) / gain;
  }
  const double amplitude = rho * std::pow(dfd.kappas()[l], 2.0 * mu);
  Signal f = amplitude * project_admissible(Signal(std::move(e)));
  const double delta = l2_norm(apply(op, f));
  const double norm_f = l2_norm(f);
  const double constant = norm_f / (std::pow(delta, 2.0 * mu / (2.0 * mu + 1.0)) * std::pow(rho, 1.0 / (2.0 * mu + 1.0)));
  return {std::move(f), delta, norm_f, constant};
}

NormBoundProbe norm_bound_probe(const TIDFD& dfd, const MultiplierBank& w_bank, const FilterSpec& filter,
                                double alpha, int trials, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("norm_bound_probe needs at least one trial");
  NormBoundProbe probe{0.0, 0.0};
  for (int t = 0; t < trials; ++t) {
    Signal g = project_admissible(add_white_noise(Signal::zeros(dfd.grid_size()), 1.0, seed + t));
    g *= 1.0 / l2_norm(g);
    const ReconstructionReport r = filtered_reconstruct(dfd, w_bank, filter, alpha, g);
    probe.empirical = std::max(probe.empirical, l2_norm(r.reconstruction));
    probe.bound = r.norm_bound;
  }
  return probe;
}

}  // namespace tidfd
