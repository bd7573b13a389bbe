#include "tidfd/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tidfd {
namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < points; ++i) g[i] = std::exp(a + (b - a) * i / (points - 1));
  return g;
}

// Grid points plus each in-range jump point and its left limit.
std::vector<double> with_left_limits(std::vector<double> grid, const FilterSpec& filter, double alpha) {
  if (!filter.jumps || grid.empty()) return grid;
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  const double lo_v = *lo;
  const double hi_v = *hi;
  for (double jump : filter.jumps(alpha)) {
    if (jump > lo_v && jump <= hi_v) {
      grid.push_back(jump);
      grid.push_back(std::nextafter(jump, 0.0));
    }
  }
  return grid;
}

double rate_residual(const FilterSpec& filter, double mu, double alpha, double kappa) {
  return std::pow(kappa, 2.0 * mu) * std::abs(1.0 - kappa * filter(alpha, kappa));
}

}  // namespace

FilterSpec truncation_filter() {
  FilterSpec f;
  f.name = "truncation";
  f.evaluate = [](double alpha, double kappa) { return kappa * kappa >= alpha ? 1.0 / kappa : 0.0; };
  f.sup_norm_law = [](double alpha) { return 1.0 / std::sqrt(alpha); };
  f.qualification = std::numeric_limits<double>::infinity();
  f.jumps = [](double alpha) { return std::vector<double>{std::sqrt(alpha)}; };
  return f;
}

FilterSpec tikhonov_filter() {
  FilterSpec f;
  f.name = "tikhonov";
  f.evaluate = [](double alpha, double kappa) { return kappa / (kappa * kappa + alpha); };
  f.sup_norm_law = [](double alpha) { return 0.5 / std::sqrt(alpha); };
  f.qualification = 1.0;
  return f;
}

double numeric_sup_norm(const FilterSpec& filter, double alpha) {
  constexpr int kPoints = 4001;
  const std::vector<double> coarse = log_grid(1e-8, 1e2, kPoints);
  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double v = std::abs(filter(alpha, coarse[i]));
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  const double lo = coarse[arg == 0 ? 0 : arg - 1];
  const double hi = coarse[std::min(arg + 1, coarse.size() - 1)];
  std::vector<double> fine = lo < hi ? log_grid(lo, hi, kPoints) : std::vector<double>{};
  for (double kappa : with_left_limits(std::move(fine), filter, alpha)) {
    best = std::max(best, std::abs(filter(alpha, kappa)));
  }
  return best;
}

double sup_norm(const FilterSpec& filter, double alpha) {
  if (filter.sup_norm_law) return filter.sup_norm_law(alpha);
  return numeric_sup_norm(filter, alpha);
}

FilterValidationReport validate_regularizing_filter(const FilterSpec& filter, std::span<const double> alpha_grid,
                                                    std::span<const double> kappa_grid,
                                                    std::span<const double> mus) {
  FilterValidationReport r{filter.name, true, 0.0, true, 0.0, true, {}};
  if (alpha_grid.empty() || kappa_grid.empty()) return r;

  auto max_gain = [&](std::span<const double> kappas) {
    double c = 0.0;
    for (double alpha : alpha_grid) {
      for (double kappa : kappas) {
        const double v = filter(alpha, kappa);
        if (!std::isfinite(v)) r.f1_ok = false;
        c = std::max(c, std::abs(kappa * v));
      }
    }
    return c;
  };
  r.c = max_gain(kappa_grid);

  const auto [kmin, kmax] = std::minmax_element(kappa_grid.begin(), kappa_grid.end());
  const std::vector<double> extended{*kmin * 1e-2, *kmin * 1e-1, *kmax * 1e1, *kmax * 1e2};
  const double c_ext = max_gain(extended);
  // Saturating filters creep toward their supremum; only real growth counts.
  r.f2_ok = std::isfinite(r.c) && c_ext <= r.c * 1.01;

  std::vector<double> alphas(alpha_grid.begin(), alpha_grid.end());
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  for (double kappa : kappa_grid) {
    double previous = std::numeric_limits<double>::infinity();
    for (double alpha : alphas) {
      const double dev = std::abs(filter(alpha, kappa) - 1.0 / kappa);
      if (dev > previous * (1.0 + 1e-12)) r.f3_monotone = false;
      previous = dev;
    }
    r.f3_max_deviation = std::max(r.f3_max_deviation, previous);
  }

  for (double mu : mus) {
    double constant = 0.0;
    for (double alpha : alpha_grid) {
      double q = 0.0;
      std::vector<double> kappas(kappa_grid.begin(), kappa_grid.end());
      for (double kappa : with_left_limits(std::move(kappas), filter, alpha)) {
        q = std::max(q, rate_residual(filter, mu, alpha, kappa));
      }
      constant = std::max(constant, q / std::pow(alpha, mu));
    }
    r.r2_table.push_back({mu, constant});
  }
  return r;
}

QualificationResult qualification_check(const FilterSpec& filter, double mu, std::span<const double> alpha_grid,
                                        double kappa_max) {
  QualificationResult r{true, 0.0, {}};
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  for (double alpha : alpha_grid) {
    std::vector<double> kappas = log_grid(1e-6, kappa_max, 4001);
    // Refine around sqrt(alpha), where Tikhonov-type filters peak.
    const double root = std::sqrt(alpha);
    for (double t : log_grid(0.5, 2.0, 201)) {
      if (root * t <= kappa_max) kappas.push_back(root * t);
    }
    double q = 0.0;
    for (double kappa : with_left_limits(std::move(kappas), filter, alpha)) {
      q = std::max(q, rate_residual(filter, mu, alpha, kappa));
    }
    r.q.push_back(q);
    const double ratio = q / std::pow(alpha, mu);
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }
  r.c_mu = ratio_max;
  r.holds = std::isfinite(ratio_max) && ratio_min > 0.0 && ratio_max <= kQualificationSpread * ratio_min;
  return r;
}

double soft_threshold(double t, double x) {
  const double m = std::abs(x) - t;
  return m > 0.0 ? std::copysign(m, x) : 0.0;
}

Signal soft_threshold(double t, const Signal& x) {
  std::vector<double> v(x.values().begin(), x.values().end());
  for (double& e : v) e = soft_threshold(t, e);
  return Signal(std::move(v));
}

}  // namespace tidfd
