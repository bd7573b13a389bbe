#pragma once

// Regularizing filters Phi_alpha(kappa) approximating 1/kappa:
//   (F1) sup_kappa |Phi_alpha(kappa)| < inf for every alpha,
//   (F2) sup_{alpha, kappa} |kappa Phi_alpha(kappa)| <= C,
//   (F3) Phi_alpha(kappa) -> 1/kappa as alpha -> 0.
// A filter has qualification mu if sup_kappa kappa^{2mu} |1 - kappa Phi_alpha(kappa)| <= C_mu alpha^mu.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tidfd/signal.hpp"

namespace tidfd {

inline constexpr double kDefaultMusStorage[] = {0.5, 1.0, 2.0};
inline constexpr std::span<const double> kDefaultMus{kDefaultMusStorage};

struct FilterSpec {
  std::string name;
  std::function<double(double alpha, double kappa)> evaluate;
  /// Closed form of sup_kappa |Phi_alpha(kappa)|, if known.
  std::function<double(double alpha)> sup_norm_law;
  /// Largest mu for which the rate condition holds (infinity: every mu).
  std::optional<double> qualification;
  /// Points where Phi_alpha jumps. Suprema include the left limit there.
  std::function<std::vector<double>(double alpha)> jumps;

  double operator()(double alpha, double kappa) const { return evaluate(alpha, kappa); }
};

/// Phi_alpha(kappa) = 1/kappa if kappa^2 >= alpha, else 0.
FilterSpec truncation_filter();
/// Phi_alpha(kappa) = kappa / (kappa^2 + alpha).
FilterSpec tikhonov_filter();

/// ||Phi_alpha||_inf from the closed form when present, else numeric_sup_norm.
double sup_norm(const FilterSpec& filter, double alpha);
/// Numeric supremum of |Phi_alpha| over kappa in [1e-8, 1e2]: a log scan,
/// then a refined scan around the best coarse point.
double numeric_sup_norm(const FilterSpec& filter, double alpha);

struct R2Entry {
  double mu;
  /// max over the alpha grid of sup_kappa kappa^{2mu}|1 - kappa Phi| / alpha^mu
  double constant;
};

struct FilterValidationReport {
  std::string name;
  bool f1_ok;
  /// max |kappa Phi_alpha(kappa)| over the product grid
  double c;
  /// false when extending the kappa grid two decades either way raises c
  bool f2_ok;
  /// max_kappa |Phi_alpha(kappa) - 1/kappa| at the smallest alpha
  double f3_max_deviation;
  /// |Phi_alpha(kappa) - 1/kappa| is non-increasing as alpha decreases, for every kappa
  bool f3_monotone;
  std::vector<R2Entry> r2_table;
};

FilterValidationReport validate_regularizing_filter(const FilterSpec& filter, std::span<const double> alpha_grid,
                                                    std::span<const double> kappa_grid,
                                                    std::span<const double> mus = kDefaultMus);

struct QualificationResult {
  bool holds;
  /// max over alpha of q(alpha) / alpha^mu
  double c_mu;
  /// q(alpha) = sup_kappa kappa^{2mu}|1 - kappa Phi_alpha(kappa)|, one per alpha
  std::vector<double> q;
};

/// holds iff q(alpha)/alpha^mu varies by at most kQualificationSpread over
/// the alpha grid. kappa ranges over a log grid on [1e-6, kappa_max].
QualificationResult qualification_check(const FilterSpec& filter, double mu, std::span<const double> alpha_grid,
                                        double kappa_max = 1.0);
inline constexpr double kQualificationSpread = 10.0;

/// sign(x) max(0, |x| - t)
double soft_threshold(double t, double x);
Signal soft_threshold(double t, const Signal& x);

}  // namespace tidfd
