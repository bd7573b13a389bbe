#include "tidfd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "tidfd/errors.hpp"

namespace tidfd {

using nlohmann::json;

// ----------------------------------------------------------------- kinds

PhantomKind parse_phantom_kind(const std::string& s) {
  if (s == "piecewise_constant") return PhantomKind::piecewise_constant;
  if (s == "smooth") return PhantomKind::smooth;
  if (s == "band") return PhantomKind::band;
  if (s == "custom_csv") return PhantomKind::custom_csv;
  throw UnknownKind("phantom '" + s + "'");
}

FilterKind parse_filter_kind(const std::string& s) {
  if (s == "tikhonov") return FilterKind::tikhonov;
  if (s == "truncation") return FilterKind::truncation;
  if (s == "soft") return FilterKind::soft;
  throw UnknownKind("filter '" + s + "'");
}

BankKind parse_bank_kind(const std::string& s) {
  if (s == "shannon") return BankKind::shannon;
  if (s == "meyer") return BankKind::meyer;
  throw UnknownKind("bank '" + s + "'");
}

std::string to_string(PhantomKind k) {
  switch (k) {
    case PhantomKind::piecewise_constant: return "piecewise_constant";
    case PhantomKind::smooth: return "smooth";
    case PhantomKind::band: return "band";
    case PhantomKind::custom_csv: return "custom_csv";
  }
  return "?";
}

std::string to_string(FilterKind k) {
  switch (k) {
    case FilterKind::tikhonov: return "tikhonov";
    case FilterKind::truncation: return "truncation";
    case FilterKind::soft: return "soft";
  }
  return "?";
}

std::string to_string(BankKind k) { return k == BankKind::shannon ? "shannon" : "meyer"; }

// ---------------------------------------------------------------- config

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  ExperimentConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") c.n = value.get<std::size_t>();
      else if (key == "phantom") c.phantom = parse_phantom_kind(value.get<std::string>());
      else if (key == "phantom_csv") c.phantom_csv = value.get<std::string>();
      else if (key == "band_scale") c.band_scale = value.get<int>();
      else if (key == "sigma") c.sigma = value.get<double>();
      else if (key == "filter") c.filter = parse_filter_kind(value.get<std::string>());
      else if (key == "alpha") c.alpha = value.get<double>();
      else if (key == "beta") c.beta = value.get<double>();
      else if (key == "beta_decimated") c.beta_decimated = value.get<double>();
      else if (key == "mu") c.mu = value.get<double>();
      else if (key == "alpha_constant") c.alpha_constant = value.get<double>();
      else if (key == "trials") c.trials = value.get<int>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "output_dir") c.output_dir = value.get<std::string>();
      else if (key == "bank") c.bank = parse_bank_kind(value.get<std::string>());
      else if (key == "deltas") c.deltas = value.get<std::vector<double>>();
      else if (key == "shifts") c.shifts = value.get<int>();
      else throw ConfigError("unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  validate(c);
  return c;
}

json to_json(const ExperimentConfig& c) {
  return json{{"n", c.n},
              {"phantom", to_string(c.phantom)},
              {"phantom_csv", c.phantom_csv},
              {"band_scale", c.band_scale},
              {"sigma", c.sigma},
              {"filter", to_string(c.filter)},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"beta_decimated", c.beta_decimated},
              {"mu", c.mu},
              {"alpha_constant", c.alpha_constant},
              {"trials", c.trials},
              {"seed", c.seed},
              {"output_dir", c.output_dir},
              {"bank", to_string(c.bank)},
              {"deltas", c.deltas},
              {"shifts", c.shifts}};
}

void validate(const ExperimentConfig& c) {
  if (!is_power_of_two(c.n) || c.n < 8) throw ConfigError("n must be a power of two >= 8");
  const int levels = log2_exact(c.n);
  if (c.band_scale < 1 || c.band_scale > levels - 1) throw ConfigError("band_scale outside the scale range");
  if (!(c.sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  if (!(c.alpha > 0.0)) throw ConfigError("alpha must be > 0");
  if (!(c.beta >= 0.0) || !(c.beta_decimated >= 0.0)) throw ConfigError("beta must be >= 0");
  if (!(c.mu > 0.0)) throw ConfigError("mu must be > 0");
  if (!(c.alpha_constant > 0.0)) throw ConfigError("alpha_constant must be > 0");
  if (c.trials < 1) throw ConfigError("trials must be >= 1");
  if (c.shifts < 1) throw ConfigError("shifts must be >= 1");
  if (c.deltas.empty()) throw ConfigError("deltas must be non-empty");
  for (double d : c.deltas) {
    if (!(d > 0.0)) throw ConfigError("deltas must be positive");
  }
  if (c.phantom == PhantomKind::custom_csv && c.phantom_csv.empty()) {
    throw ConfigError("custom_csv phantom needs phantom_csv");
  }
}

// -------------------------------------------------------------- phantoms

namespace {

Signal normalized(const Signal& f) {
  Signal p = project_admissible(f);
  const double nrm = l2_norm(p);
  if (nrm == 0.0) throw InvalidSignal("phantom vanishes after projection");
  return (1.0 / nrm) * p;
}

Signal sampled(std::size_t n, const std::function<double(double)>& fn) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = fn(static_cast<double>(i) / static_cast<double>(n));
  return Signal(std::move(v));
}

double indicator(double x, double a, double b) { return (x >= a && x < b) ? 1.0 : 0.0; }

}  // namespace

Signal make_phantom(PhantomKind kind, std::size_t n, int band_scale) {
  switch (kind) {
    case PhantomKind::piecewise_constant:
      return normalized(sampled(n, [](double x) {
        return indicator(x, 0.15, 0.35) - 0.7 * indicator(x, 0.45, 0.6) + 0.4 * indicator(x, 0.7, 0.85);
      }));
    case PhantomKind::smooth:
      return normalized(sampled(n, [](double x) {
        return std::exp(-(x - 0.35) * (x - 0.35) / 0.004) - 0.6 * std::exp(-(x - 0.7) * (x - 0.7) / 0.009);
      }));
    case PhantomKind::band: {
      const int lo = 1 << (band_scale - 1);
      const int hi = 1 << band_scale;
      const Spectrum s = Spectrum::from_frequency(n, [&](int k) -> Complex {
        const int a = std::abs(k);
        return (a >= lo && a < hi && a < static_cast<int>(n / 2)) ? 1.0 : 0.0;
      }, true);
      return normalized(from_spectrum(s));
    }
    case PhantomKind::custom_csv:
      break;
  }
  throw UnknownKind("make_phantom cannot build '" + to_string(kind) + "' without a file");
}

Signal load_phantom(const ExperimentConfig& c) {
  if (c.phantom != PhantomKind::custom_csv) return make_phantom(c.phantom, c.n, c.band_scale);
  std::ifstream in(c.phantom_csv);
  if (!in) throw ConfigError("cannot open phantom_csv '" + c.phantom_csv + "'");
  Signal f = read_csv(in);
  if (f.size() != c.n) throw ConfigError("phantom_csv length differs from n");
  return normalized(f);
}

// ------------------------------------------------------------- pipeline

Setup make_setup(const ExperimentConfig& c) {
  MultiplierBank u = c.bank == BankKind::shannon ? shannon_bank(c.n) : meyer_bank(c.n);
  MultiplierBank w = canonical_dual(u);
  TIDFD dfd = build_ti_wvd(u);
  return Setup{std::move(u), std::move(w), std::move(dfd), integration_op(c.n)};
}

double relative_error(const Signal& truth, const Signal& estimate) {
  return l2_norm(estimate - truth) / l2_norm(truth);
}

double median(std::vector<double> v) {
  if (v.empty()) throw ConfigError("median of an empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

Signal noisy_data(const Setup& s, const Signal& truth, double sigma, std::uint64_t seed) {
  return project_admissible(add_white_noise(apply(s.op, truth), sigma, seed));
}

namespace {

double min_kappa(const TIDFD& dfd) { return *std::min_element(dfd.kappas().begin(), dfd.kappas().end()); }

FilterSpec filter_for(FilterKind k) {
  if (k == FilterKind::tikhonov) return tikhonov_filter();
  if (k == FilterKind::truncation) return truncation_filter();
  throw ConfigError("soft thresholding is not a linear filter");
}

}  // namespace

Trial run_trial(const Setup& s, const ExperimentConfig& c, const Signal& truth, std::uint64_t seed) {
  Signal data = noisy_data(s, truth, c.sigma, seed);
  const double delta = l2_norm(data - apply(s.op, truth));
  if (c.filter == FilterKind::soft) {
    Signal rec = thresholded_reconstruct(s.dfd, s.w_bank, c.beta, data);
    // Soft thresholding never enlarges a coefficient, so the unfiltered
    // inverse's bound ||W|| ||V|| / kappa_min still applies.
    const double bound = operator_norm(s.w_bank) * operator_norm(s.dfd.v_bank()) / min_kappa(s.dfd);
    const CoefficientFamily d = analysis(s.dfd.v_bank(), data);
    std::vector<double> energy;
    for (std::size_t l = 0; l < s.dfd.size(); ++l) {
      energy.push_back(l2_norm(soft_threshold(std::ldexp(c.beta, -s.dfd.scales()[l]), d[l])) / s.dfd.kappas()[l]);
    }
    const double err = relative_error(truth, rec);
    return {std::move(data), std::move(rec), delta, err, bound, std::move(energy)};
  }
  ReconstructionReport r = filtered_reconstruct(s.dfd, s.w_bank, filter_for(c.filter), c.alpha, data);
  const double err = relative_error(truth, r.reconstruction);
  return {std::move(data), std::move(r.reconstruction), delta, err, r.norm_bound, std::move(r.per_scale_energy)};
}

std::vector<double> trial_errors(const Setup& s, const ExperimentConfig& c, const Signal& truth) {
  std::vector<double> errors;
  for (int t = 0; t < c.trials; ++t) errors.push_back(run_trial(s, c, truth, c.seed + t).relative_error);
  return errors;
}

// ----------------------------------------------------------------- output

namespace {

// Reports echo the configuration minus the output location, so a run's bytes
// do not depend on where it was written.
json echoed_config(const ExperimentConfig& c) {
  json j = to_json(c);
  j.erase("output_dir");
  return j;
}

std::filesystem::path prepare_dir(const ExperimentConfig& c) {
  std::filesystem::path dir(c.output_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_signal(const std::filesystem::path& p, const Signal& f) {
  std::ofstream os(p, std::ios::binary);
  write_csv(os, f);
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream os(p, std::ios::binary);
  os << j.dump(2) << '\n';
}

}  // namespace

json run_reconstruction(const ExperimentConfig& c) {
  validate(c);
  const Setup s = make_setup(c);
  const Signal truth = load_phantom(c);
  const Trial first = run_trial(s, c, truth, c.seed);
  const std::vector<double> errors = trial_errors(s, c, truth);
  const double gain = l2_norm(first.data) > 0.0 ? l2_norm(first.reconstruction) / l2_norm(first.data) : 0.0;

  json report{{"config", echoed_config(c)},
              {"filter", to_string(c.filter)},
              {"relative_error", first.relative_error},
              {"delta", first.delta},
              {"norm_bound", first.norm_bound},
              {"empirical_gain", gain},
              {"scales", s.dfd.scales()},
              {"per_scale_energy", first.per_scale_energy},
              {"errors", errors},
              {"median_error", median(errors)},
              {"ok", gain <= first.norm_bound * (1.0 + 1e-12)}};
  if (c.filter == FilterKind::soft) report["beta"] = c.beta;
  else report["alpha"] = c.alpha;

  if (!c.output_dir.empty()) {
    const auto dir = prepare_dir(c);
    write_signal(dir / "recon.csv", first.reconstruction);
    write_signal(dir / "phantom.csv", truth);
    write_signal(dir / "data.csv", first.data);
    write_json(dir / "report.json", report);
  }
  return report;
}

RateStudyResult rate_study(const ExperimentConfig& c) {
  validate(c);
  const FilterSpec filter = filter_for(c.filter);
  const Setup s = make_setup(c);
  const Signal truth = load_phantom(c);
  const Signal clean = apply(s.op, truth);

  RateStudyResult r{};
  r.rho = source_norm(s.dfd, truth, c.mu);
  r.target_slope = 2.0 * c.mu / (2.0 * c.mu + 1.0);
  r.qualification_violated = filter.qualification && c.mu > *filter.qualification;

  std::vector<Signal> unit_noise;
  for (int t = 0; t < c.trials; ++t) {
    Signal eta = project_admissible(add_white_noise(Signal::zeros(c.n), 1.0, c.seed + t));
    unit_noise.push_back((1.0 / l2_norm(eta)) * eta);
  }

  std::vector<double> deltas = c.deltas;
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  std::vector<double> medians;
  for (double delta : deltas) {
    const double alpha = a_priori_alpha(delta, r.rho, c.mu, c.alpha_constant);
    std::vector<double> errors;
    for (const Signal& eta : unit_noise) {
      const Signal g = clean + delta * eta;
      errors.push_back(relative_error(truth, filtered_reconstruct(s.dfd, s.w_bank, filter, alpha, g).reconstruction));
    }
    const auto [lo, hi] = std::minmax_element(errors.begin(), errors.end());
    r.rows.push_back({delta, alpha, median(errors), *lo, *hi});
    medians.push_back(r.rows.back().median_error);
  }
  r.fitted_slope = loglog_slope(deltas, medians);
  return r;
}

json run_rate_study(const ExperimentConfig& c) {
  const RateStudyResult r = rate_study(c);
  json rows = json::array();
  for (const RateRow& row : r.rows) {
    rows.push_back({{"delta", row.delta},
                    {"alpha", row.alpha},
                    {"median_error", row.median_error},
                    {"min_error", row.min_error},
                    {"max_error", row.max_error}});
  }
  json report{{"config", echoed_config(c)},
              {"rho", r.rho},
              {"rows", rows},
              {"fitted_slope", r.fitted_slope},
              {"target_slope", r.target_slope},
              {"qualification_violated", r.qualification_violated},
              {"ok", std::isfinite(r.fitted_slope)}};
  if (!c.output_dir.empty()) {
    const auto dir = prepare_dir(c);
    std::ofstream os(dir / "rate.csv", std::ios::binary);
    os << "delta,alpha,median_error,min_error,max_error\n";
    char buf[160];
    for (const RateRow& row : r.rows) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", row.delta, row.alpha, row.median_error,
                    row.min_error, row.max_error);
      os << buf;
    }
    write_json(dir / "rate.json", report);
  }
  return report;
}

// ------------------------------------------------------------ comparison

double shift_variance(const std::function<Signal(const Signal&)>& reconstruct, const Signal& g, int shifts) {
  const Signal base = reconstruct(g);
  double worst = 0.0;
  for (int m = 1; m <= shifts; ++m) {
    const Signal back = shift(reconstruct(shift(g, m)), -m);
    worst = std::max(worst, l2_norm(back - base));
  }
  return worst;
}

ComparisonResult comparison(const ExperimentConfig& c) {
  validate(c);
  const Setup s = make_setup(c);
  const Signal truth = load_phantom(c);
  auto ti = [&](const Signal& g) { return thresholded_reconstruct(s.dfd, s.w_bank, c.beta, g); };
  auto dec = [&](const Signal& g) {
    return decimated_reconstruct(s.dfd, s.w_bank, DecimatedMode::soft(c.beta_decimated), g);
  };

  std::vector<double> e_ti, e_dec;
  for (int t = 0; t < c.trials; ++t) {
    const Signal g = noisy_data(s, truth, c.sigma, c.seed + t);
    e_ti.push_back(relative_error(truth, ti(g)));
    e_dec.push_back(relative_error(truth, dec(g)));
  }
  const Signal g0 = noisy_data(s, truth, c.sigma, c.seed);
  return ComparisonResult{e_ti,
                          e_dec,
                          median(e_ti),
                          median(e_dec),
                          shift_variance(ti, g0, c.shifts),
                          shift_variance(dec, g0, c.shifts),
                          ti(g0),
                          dec(g0)};
}

json run_comparison(const ExperimentConfig& c) {
  const ComparisonResult r = comparison(c);
  json report{{"config", echoed_config(c)},
              {"beta_ti", c.beta},
              {"beta_decimated", c.beta_decimated},
              {"errors_ti", r.errors_ti},
              {"errors_decimated", r.errors_decimated},
              {"median_error_ti", r.median_ti},
              {"median_error_decimated", r.median_decimated},
              {"shift_variance_ti", r.shift_variance_ti},
              {"shift_variance_decimated", r.shift_variance_decimated},
              {"ok", r.shift_variance_ti <= 1e-10}};
  if (!c.output_dir.empty()) {
    const auto dir = prepare_dir(c);
    write_signal(dir / "ti.csv", r.reconstruction_ti);
    write_signal(dir / "decimated.csv", r.reconstruction_decimated);
    write_json(dir / "summary.json", report);
  }
  return report;
}

// ------------------------------------------------------------ validation

json run_validate_frame(const ExperimentConfig& c) {
  validate(c);
  const Setup s = make_setup(c);
  const FrameBounds fb = frame_bounds(s.u_bank, true);
  const double dual_residual = verify_dual(s.u_bank, s.w_bank);

  constexpr int kSignals = 100;
  double reproducing = 0.0;
  for (int t = 0; t < kSignals; ++t) {
    const Signal f = project_admissible(add_white_noise(Signal::zeros(c.n), 1.0, c.seed + t));
    reproducing = std::max(reproducing, relative_error(f, synthesis(s.w_bank, analysis(s.u_bank, f))));
  }
  const TIDFDReport tr = verify_tidfd(s.dfd, s.op, kSignals, c.seed);
  const BandEnvelope env = band_envelope(s.u_bank);
  const IllPosednessReport ip = illposedness_report(s.dfd);

  json report{{"config", echoed_config(c)},
              {"frame_bounds", {{"lower", fb.lower}, {"upper", fb.upper}}},
              {"dual_residual", dual_residual},
              {"reproducing_error", reproducing},
              {"ti1_bounds", {{"lower", tr.ti1_bounds.lower}, {"upper", tr.ti1_bounds.upper}}},
              {"ti2_bounds", {{"lower", tr.ti2_bounds.lower}, {"upper", tr.ti2_bounds.upper}}},
              {"ti3_residual", tr.ti3_residual},
              {"band_envelope", {{"a", env.a}, {"b", env.b}}},
              {"illposedness",
               {{"kappa_min", ip.kappa_min},
                {"kappa_max", ip.kappa_max},
                {"v_norm_min", ip.v_norm_min},
                {"verdict", ip.verdict == Verdict::ill_posed ? "ill_posed" : "bounded"}}},
              {"ok", dual_residual <= 1e-10 && reproducing <= 1e-10 && tr.ti3_residual <= 1e-10}};
  if (!c.output_dir.empty()) {
    const auto dir = prepare_dir(c);
    {
      std::ofstream os(dir / "bank.csv", std::ios::binary);
      write_bank_csv(os, s.u_bank);
    }
    {
      std::ofstream os(dir / "dual_bank.csv", std::ios::binary);
      write_bank_csv(os, s.w_bank);
    }
    {
      std::ofstream os(dir / "vaguelette_bank.csv", std::ios::binary);
      write_bank_csv(os, s.dfd.v_bank());
    }
    {
      std::ofstream os(dir / "kappa.csv", std::ios::binary);
      write_kappa_csv(os, s.dfd);
    }
    {
      std::ofstream os(dir / "operator.csv", std::ios::binary);
      write_operator_csv(os, s.op);
    }
    write_json(dir / "frame.json", report);
  }
  return report;
}

json run_validate_filter(const ExperimentConfig& c) {
  validate(c);
  const FilterSpec filter = filter_for(c.filter);
  const std::vector<double> alphas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> kappas;
  for (int j = 1; j < log2_exact(c.n); ++j) kappas.push_back(std::ldexp(1.0, -j));
  const FilterValidationReport v = validate_regularizing_filter(filter, alphas, kappas);

  json r2 = json::array();
  for (const R2Entry& e : v.r2_table) r2.push_back({{"mu", e.mu}, {"constant", e.constant}});
  json qual = json::array();
  const std::vector<double> q_alphas{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  for (double mu : kDefaultMus) {
    const QualificationResult q = qualification_check(filter, mu, q_alphas);
    qual.push_back({{"mu", mu}, {"holds", q.holds}, {"c_mu", q.c_mu}});
  }
  json sup = json::array();
  double sup_dev = 0.0;
  for (double alpha : alphas) {
    const double numeric = numeric_sup_norm(filter, alpha);
    const double law = sup_norm(filter, alpha);
    sup_dev = std::max(sup_dev, std::abs(numeric - law) / law);
    sup.push_back({{"alpha", alpha}, {"numeric", numeric}, {"law", law}});
  }
  json report{{"name", v.name},
              {"f1_ok", v.f1_ok},
              {"c", v.c},
              {"f2_ok", v.f2_ok},
              {"f3_max_deviation", v.f3_max_deviation},
              {"f3_monotone", v.f3_monotone},
              {"r2_table", r2},
              {"qualification", qual},
              {"sup_norm", sup},
              {"ok", v.f1_ok && v.f2_ok && v.f3_monotone && sup_dev <= 1e-6}};
  if (!c.output_dir.empty()) write_json(prepare_dir(c) / "filter.json", report);
  return report;
}

json run_probe_optimality(const ExperimentConfig& c) {
  validate(c);
  const Setup s = make_setup(c);
  constexpr double rho = 1.0;
  json rows = json::array();
  std::vector<double> deltas, norms;
  for (int scale : s.dfd.scales()) {
    const WorstCaseProbe p = worst_case_probe(s.dfd, s.op, c.mu, rho, scale);
    deltas.push_back(p.delta);
    norms.push_back(p.norm_f);
    rows.push_back({{"scale", scale},
                    {"delta", p.delta},
                    {"norm_f", p.norm_f},
                    {"constant", p.constant},
                    {"source_norm", source_norm(s.dfd, p.f, c.mu)}});
  }
  const double slope = loglog_slope(deltas, norms);
  const double target = 2.0 * c.mu / (2.0 * c.mu + 1.0);
  json report{{"config", echoed_config(c)},
              {"rho", rho},
              {"rows", rows},
              {"fitted_slope", slope},
              {"target_slope", target},
              {"ok", std::abs(slope - target) <= 1e-6}};
  if (!c.output_dir.empty()) {
    const auto dir = prepare_dir(c);
    std::ofstream os(dir / "optimality.csv", std::ios::binary);
    os << "scale,delta,norm_f\n";
    char buf[128];
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", s.dfd.scales()[i], deltas[i], norms[i]);
      os << buf;
    }
    write_json(dir / "optimality.json", report);
  }
  return report;
}

bool report_ok(const json& report) { return report.value("ok", false); }

}  // namespace tidfd
