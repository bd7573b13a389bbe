#pragma once

// Experiment harness behind the command line tool: phantoms, configuration,
// reconstruction runs, rate studies and TI-versus-decimated comparisons.
// Every run is a pure function of its configuration; outputs (CSV, JSON) are
// byte-identical for identical configurations.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tidfd/recon.hpp"

namespace tidfd {

enum class PhantomKind { piecewise_constant, smooth, band, custom_csv };
enum class FilterKind { tikhonov, truncation, soft };
enum class BankKind { shannon, meyer };

PhantomKind parse_phantom_kind(const std::string& s);
FilterKind parse_filter_kind(const std::string& s);
BankKind parse_bank_kind(const std::string& s);
std::string to_string(PhantomKind k);
std::string to_string(FilterKind k);
std::string to_string(BankKind k);

inline const std::vector<double> kDefaultDeltas{1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};

struct ExperimentConfig {
  std::size_t n = 512;
  PhantomKind phantom = PhantomKind::piecewise_constant;
  std::string phantom_csv;
  int band_scale = 4;
  double sigma = 0.03;
  FilterKind filter = FilterKind::tikhonov;
  double alpha = 0.01;
  double beta = 0.05;
  double beta_decimated = 0.005;
  double mu = 1.0;
  double alpha_constant = 1.0;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  BankKind bank = BankKind::shannon;
  std::vector<double> deltas = kDefaultDeltas;
  int shifts = 16;
};

/// Reads a JSON object whose keys are ExperimentConfig field names. Unknown
/// keys and invalid values raise ConfigError; unknown kinds raise UnknownKind.
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);
void validate(const ExperimentConfig& c);

/// Mean-free (zero DC and Nyquist), unit-norm phantoms:
///   piecewise_constant: chi[0.15,0.35) - 0.7 chi[0.45,0.6) + 0.4 chi[0.7,0.85)
///   smooth: exp(-(x-0.35)^2/0.004) - 0.6 exp(-(x-0.7)^2/0.009)
///   band: flat zero-phase spectrum on 2^{j-1} <= |k| < 2^j, j = band_scale
Signal make_phantom(PhantomKind kind, std::size_t n, int band_scale = 4);
/// make_phantom, or the CSV at c.phantom_csv for custom_csv (then projected and normalized).
Signal load_phantom(const ExperimentConfig& c);

struct Setup {
  MultiplierBank u_bank;
  MultiplierBank w_bank;
  TIDFD dfd;
  DiagonalOperator op;
};
Setup make_setup(const ExperimentConfig& c);

double relative_error(const Signal& truth, const Signal& estimate);
double median(std::vector<double> v);
/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Noisy data K f + eta projected onto the admissible signals.
Signal noisy_data(const Setup& s, const Signal& truth, double sigma, std::uint64_t seed);

struct Trial {
  Signal data;
  Signal reconstruction;
  double delta;
  double relative_error;
  double norm_bound;
  std::vector<double> per_scale_energy;
};

/// One reconstruction with the configured filter (alpha for tikhonov and
/// truncation, beta for soft) on data generated with `seed`.
Trial run_trial(const Setup& s, const ExperimentConfig& c, const Signal& truth, std::uint64_t seed);

/// Relative errors for seeds c.seed .. c.seed + c.trials - 1.
std::vector<double> trial_errors(const Setup& s, const ExperimentConfig& c, const Signal& truth);

/// Writes recon.csv and report.json to c.output_dir (if non-empty) and returns the report.
nlohmann::json run_reconstruction(const ExperimentConfig& c);

struct RateRow {
  double delta;
  double alpha;
  double median_error;
  double min_error;
  double max_error;
};

struct RateStudyResult {
  std::vector<RateRow> rows;
  double rho;
  double fitted_slope;
  double target_slope;
  bool qualification_violated;
};

/// For each delta: noise rescaled to ||eta|| = delta, alpha from
/// a_priori_alpha(delta, rho, mu, alpha_constant) with rho = source_norm.
RateStudyResult rate_study(const ExperimentConfig& c);
/// rate_study plus rate.csv / rate.json output.
nlohmann::json run_rate_study(const ExperimentConfig& c);

/// max over m = 1..shifts of ||shift(rec(shift(g, m)), -m) - rec(g)||
double shift_variance(const std::function<Signal(const Signal&)>& reconstruct, const Signal& g, int shifts);

struct ComparisonResult {
  std::vector<double> errors_ti;
  std::vector<double> errors_decimated;
  double median_ti;
  double median_decimated;
  double shift_variance_ti;
  double shift_variance_decimated;
  Signal reconstruction_ti;
  Signal reconstruction_decimated;
};

/// Thresholded TI (beta) against thresholded decimated (beta_decimated).
ComparisonResult comparison(const ExperimentConfig& c);
/// comparison plus ti.csv / decimated.csv / summary.json output.
nlohmann::json run_comparison(const ExperimentConfig& c);

/// Frame, dual, TI-DFD and ill-posedness diagnostics plus bank/operator CSVs.
nlohmann::json run_validate_frame(const ExperimentConfig& c);
/// Filter axioms and qualification for the configured filter.
nlohmann::json run_validate_filter(const ExperimentConfig& c);
/// Order-optimality family over every scale with rho = 1.
nlohmann::json run_probe_optimality(const ExperimentConfig& c);

/// Key "ok" in every run_* report; false signals a numerical invariant failure.
bool report_ok(const nlohmann::json& report);

}  // namespace tidfd
