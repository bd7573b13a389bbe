#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tidfd/errors.hpp"
#include "tidfd/experiment.hpp"

using namespace tidfd;
using nlohmann::json;

namespace {

std::string temp_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("tidfd_test_" + name);
  std::filesystem::remove_all(p);
  return p.string();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("phantoms are admissible and unit norm") {
  for (PhantomKind k : {PhantomKind::piecewise_constant, PhantomKind::smooth, PhantomKind::band}) {
    const Signal f = make_phantom(k, 512);
    CHECK(std::abs(f.mean()) <= 1e-14);
    CHECK(std::abs(l2_norm(f) - 1.0) <= 1e-12);
    CHECK(is_admissible(f));
  }
  CHECK_THROWS_AS(make_phantom(PhantomKind::custom_csv, 512), UnknownKind);
  CHECK_THROWS_AS(parse_phantom_kind("staircase"), UnknownKind);
}

TEST_CASE("band phantom lives in one scale") {
  const Signal f = make_phantom(PhantomKind::band, 512, 4);
  for (int k = -256; k < 256; ++k) {
    const double a = std::abs(oracle::dft_coefficient(f, k));
    if (std::abs(k) >= 8 && std::abs(k) < 16) CHECK(a > 1e-3);
    else CHECK(a < 1e-14);
  }
  const CoefficientFamily c = analysis(shannon_bank(512), f);
  for (std::size_t l = 0; l < c.size(); ++l) CHECK((l2_norm(c[l]) > 0.5) == (l == 3));
}

TEST_CASE("piecewise-constant phantom has jumps") {
  const Signal f = make_phantom(PhantomKind::piecewise_constant, 512);
  int jumps = 0;
  for (std::size_t i = 0; i < 512; ++i) {
    if (std::abs(f[(i + 1) % 512] - f[i]) > 0.3) ++jumps;
  }
  CHECK(jumps >= 2);
}

TEST_CASE("piecewise-constant support stays inside [0.1, 0.9]") {
  {
    const Signal f = make_phantom(PhantomKind::piecewise_constant, 512);
    // after projection the outside is flat up to the alternating mode
    const double outside[2] = {f[0], f[1]};
    for (std::size_t i = 0; i < 512; ++i) {
      const double x = f.x(i);
      if (x < 0.1 || x >= 0.9) CHECK(std::abs(f[i] - outside[i % 2]) < 1e-12);
    }
  }
}

TEST_CASE("config parsing") {
  const ExperimentConfig c = parse_config(json::parse(R"({"n": 256, "phantom": "smooth", "alpha": 0.025})"));
  CHECK(c.n == 256);
  CHECK(c.phantom == PhantomKind::smooth);
  CHECK(c.alpha == 0.025);
  CHECK(c.sigma == 0.03);
  CHECK(parse_config(to_json(c)).alpha == 0.025);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n": 100})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"sigma": -1})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"trials": 0})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"gamma": 1})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n": "big"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"filter": "landweber"})")), UnknownKind);
  CHECK_THROWS_AS(parse_config(json::parse(R"([1, 2])")), ConfigError);
}

TEST_CASE("custom csv phantom") {
  const std::string dir = temp_dir("custom");
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/f.csv";
  {
    std::ofstream os(path);
    write_csv(os, oracle::random_signal(64, 3));
  }
  ExperimentConfig c;
  c.n = 64;
  c.phantom = PhantomKind::custom_csv;
  c.phantom_csv = path;
  const Signal f = load_phantom(c);
  CHECK(is_admissible(f));
  CHECK(l2_norm(f) == doctest::Approx(1.0));
  c.n = 128;
  CHECK_THROWS_AS(load_phantom(c), ConfigError);
}

TEST_CASE("noise-free truncation reconstruction is exact") {
  ExperimentConfig c;
  c.sigma = 0.0;
  c.filter = FilterKind::truncation;
  c.alpha = std::pow(2.0, -16);
  c.output_dir = "";
  const json r = run_reconstruction(c);
  CHECK(r["relative_error"].get<double>() <= 1e-8);
  CHECK(report_ok(r));
}

TEST_CASE("reconstruction report carries the norm bound") {
  ExperimentConfig c;
  c.output_dir = temp_dir("recon");
  const json r = run_reconstruction(c);
  CHECK(r.contains("norm_bound"));
  CHECK(r.contains("empirical_gain"));
  CHECK(r["empirical_gain"].get<double>() <= r["norm_bound"].get<double>());
  for (const char* f : {"recon.csv", "report.json", "phantom.csv", "data.csv"}) {
    CHECK(std::filesystem::exists(std::filesystem::path(c.output_dir) / f));
  }
}

TEST_CASE("run_reconstruction is deterministic") {
  ExperimentConfig c;
  c.trials = 3;
  c.output_dir = temp_dir("det_a");
  run_reconstruction(c);
  const std::string a = c.output_dir;
  c.output_dir = temp_dir("det_b");
  run_reconstruction(c);
  for (const char* f : {"recon.csv", "data.csv"}) CHECK(slurp(std::filesystem::path(a) / f) == slurp(std::filesystem::path(c.output_dir) / f));
}

TEST_CASE("rate study rows and slope") {
  ExperimentConfig c;
  c.phantom = PhantomKind::band;
  c.trials = 3;
  c.output_dir = "";
  const RateStudyResult r = rate_study(c);
  REQUIRE(r.rows.size() == kDefaultDeltas.size());
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].delta < r.rows[i - 1].delta);
  CHECK(std::isfinite(r.fitted_slope));
  CHECK(r.target_slope == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(r.qualification_violated);
  c.mu = 2.0;
  CHECK(rate_study(c).qualification_violated);
}

TEST_CASE("truncation rate study at mu = 1/2") {
  ExperimentConfig c;
  c.phantom = PhantomKind::band;
  c.band_scale = 4;
  c.filter = FilterKind::truncation;
  c.mu = 0.5;
  c.trials = 10;
  c.output_dir = "";
  const RateStudyResult r = rate_study(c);
  CHECK(r.target_slope == doctest::Approx(0.5));
  CHECK(r.fitted_slope >= 0.40);
  CHECK(r.fitted_slope <= 0.60);
}

TEST_CASE("median error fluctuates less with more trials") {
  ExperimentConfig c;
  c.phantom = PhantomKind::band;
  c.deltas = {1e-2};
  c.output_dir = "";
  auto spread = [&](int trials) {
    c.trials = trials;
    std::vector<double> medians;
    for (std::uint64_t batch = 0; batch < 12; ++batch) {
      c.seed = 1000 * batch;
      medians.push_back(rate_study(c).rows[0].median_error);
    }
    double m = 0, v = 0;
    for (double x : medians) m += x / medians.size();
    for (double x : medians) v += (x - m) * (x - m) / medians.size();
    return v;
  };
  CHECK(spread(40) < spread(2));
}

TEST_CASE("comparison without thresholds equals exact inversion") {
  ExperimentConfig c;
  c.beta = 0.0;
  c.beta_decimated = 0.0;
  c.trials = 3;
  c.shifts = 2;
  c.output_dir = "";
  const ComparisonResult r = comparison(c);
  const Setup s = make_setup(c);
  const Signal f = load_phantom(c);
  for (int t = 0; t < 3; ++t) {
    const Signal g = noisy_data(s, f, c.sigma, c.seed + t);
    const double exact = relative_error(f, exact_inverse(s.dfd, s.w_bank, g));
    CHECK(r.errors_ti[t] == doctest::Approx(exact).epsilon(1e-9));
    CHECK(r.errors_decimated[t] == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("comparison writes its outputs") {
  ExperimentConfig c;
  c.trials = 2;
  c.output_dir = temp_dir("compare");
  const json r = run_comparison(c);
  CHECK(r["shift_variance_ti"].get<double>() <= 1e-10);
  for (const char* f : {"ti.csv", "decimated.csv", "summary.json"}) {
    CHECK(std::filesystem::exists(std::filesystem::path(c.output_dir) / f));
  }
}

TEST_CASE("validation runs report ok") {
  ExperimentConfig c;
  c.output_dir = "";
  CHECK(report_ok(run_validate_frame(c)));
  CHECK(report_ok(run_validate_filter(c)));
  c.filter = FilterKind::truncation;
  CHECK(report_ok(run_validate_filter(c)));
  CHECK(report_ok(run_probe_optimality(c)));
  c.filter = FilterKind::soft;
  CHECK_THROWS_AS(run_validate_filter(c), ConfigError);
}

TEST_CASE("helpers") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  const std::vector<double> x{1, 10, 100}, y{2, 20, 200};
  CHECK(loglog_slope(x, y) == doctest::Approx(1.0));
  const std::vector<double> y2{1, 100, 10000};
  CHECK(loglog_slope(x, y2) == doctest::Approx(2.0));
}
