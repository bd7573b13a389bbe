#include <doctest.h>

#include <limits>

#include "tidfd/filter.hpp"

using namespace tidfd;

namespace {

std::vector<double> dyadic_kappas(int finest) {
  std::vector<double> k;
  for (int j = 1; j <= finest; ++j) k.push_back(std::ldexp(1.0, -j));
  return k;
}

const std::vector<double> kAlphas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

}  // namespace

TEST_CASE("truncation filter values") {
  const FilterSpec t = truncation_filter();
  CHECK(t(0.04, 0.3) == doctest::Approx(1.0 / 0.3).epsilon(1e-15));
  CHECK(t(0.04, 0.1) == 0.0);
  CHECK(t(0.04, 0.2) == doctest::Approx(5.0));
  CHECK(t.qualification.has_value());
  CHECK(std::isinf(*t.qualification));
}

TEST_CASE("truncation qualification is exactly alpha^mu") {
  const FilterSpec t = truncation_filter();
  const std::vector<double> alpha{0.01};
  const QualificationResult q = qualification_check(t, 1.0, alpha);
  REQUIRE(q.q.size() == 1);
  CHECK(q.q[0] == doctest::Approx(0.01).epsilon(1e-12));
  for (double mu : {0.5, 1.0, 2.0}) {
    const std::vector<double> alphas{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const QualificationResult r = qualification_check(t, mu, alphas);
    CHECK(r.holds);
    CHECK(r.c_mu == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < alphas.size(); ++i) CHECK(r.q[i] == doctest::Approx(std::pow(alphas[i], mu)).epsilon(1e-12));
  }
}

TEST_CASE("tikhonov filter values and sup norm") {
  const FilterSpec t = tikhonov_filter();
  CHECK(t(0.01, 0.1) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(std::abs(numeric_sup_norm(t, 0.04) - 2.5) <= 1e-6);
  for (double alpha : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
    const double law = 0.5 / std::sqrt(alpha);
    CHECK(std::abs(numeric_sup_norm(t, alpha) - law) <= 1e-6 * law);
    CHECK(sup_norm(t, alpha) == doctest::Approx(law).epsilon(1e-15));
  }
  for (double alpha : kAlphas) {
    for (int i = -400; i <= 200; ++i) {
      const double kappa = std::pow(10.0, i / 100.0);
      CHECK(kappa * t(alpha, kappa) <= 1.0);
    }
  }
  CHECK(*t.qualification == 1.0);
}

TEST_CASE("truncation sup norm law includes the jump") {
  const FilterSpec t = truncation_filter();
  for (double alpha : {1e-1, 1e-3, 1e-5}) {
    CHECK(sup_norm(t, alpha) == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-15));
    CHECK(numeric_sup_norm(t, alpha) == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-12));
  }
}

TEST_CASE("validation report for tikhonov") {
  const std::vector<double> kappas = dyadic_kappas(8);
  const FilterValidationReport r = validate_regularizing_filter(tikhonov_filter(), kAlphas, kappas);
  CHECK(r.name == "tikhonov");
  CHECK(r.f1_ok);
  CHECK(r.f2_ok);
  CHECK(r.c <= 1.0);
  CHECK(r.f3_monotone);
  CHECK(std::isfinite(r.f3_max_deviation));
  // |Phi - 1/kappa| = alpha / (kappa (kappa^2 + alpha)) at kappa = 0.5
  const FilterSpec t = tikhonov_filter();
  for (double alpha : kAlphas) {
    const double dev = std::abs(t(alpha, 0.5) - 2.0);
    CHECK(dev == doctest::Approx(alpha / (0.5 * (0.25 + alpha))).epsilon(1e-10));
    CHECK(dev / alpha == doctest::Approx(8.0).epsilon(0.5));
  }
  for (const R2Entry& e : r.r2_table) CHECK(std::isfinite(e.constant));
}

TEST_CASE("validation report for truncation has C = 1") {
  const std::vector<double> kappas = dyadic_kappas(8);
  const FilterValidationReport r = validate_regularizing_filter(truncation_filter(), kAlphas, kappas);
  CHECK(r.c == 1.0);
  CHECK(r.f1_ok);
  CHECK(r.f2_ok);
}

TEST_CASE("a non-filter is flagged") {
  FilterSpec bad{"inverse_square", [](double, double kappa) { return 1.0 / (kappa * kappa); }, nullptr, std::nullopt,
                 nullptr};
  const std::vector<double> kappas = dyadic_kappas(8);
  const FilterValidationReport r = validate_regularizing_filter(bad, kAlphas, kappas);
  CHECK_FALSE(r.f2_ok);
  CHECK(r.c == doctest::Approx(256.0));
}

TEST_CASE("tikhonov qualification holds for mu <= 1 only") {
  const std::vector<double> alphas{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  CHECK(qualification_check(tikhonov_filter(), 0.5, alphas).holds);
  CHECK(qualification_check(tikhonov_filter(), 1.0, alphas).holds);
  const QualificationResult two = qualification_check(tikhonov_filter(), 2.0, alphas);
  CHECK_FALSE(two.holds);
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    CHECK(two.q[i] / std::pow(alphas[i], 2) > two.q[i - 1] / std::pow(alphas[i - 1], 2));
  }
}

TEST_CASE("soft threshold") {
  CHECK(soft_threshold(0.5, 0.3) == 0.0);
  CHECK(soft_threshold(0.5, -1.2) == doctest::Approx(-0.7).epsilon(1e-15));
  CHECK(soft_threshold(0.5, 1.2) == doctest::Approx(0.7).epsilon(1e-15));
  for (double x : {-3.0, -0.1, 0.0, 0.2, 5.0}) CHECK(soft_threshold(0.0, x) == x);
  std::vector<double> v(8, 0.0);
  v[2] = 2.0;
  v[5] = -0.25;
  const Signal s = soft_threshold(0.5, Signal(v));
  CHECK(s[2] == 1.5);
  CHECK(s[5] == 0.0);
}
