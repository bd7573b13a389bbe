#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "tidfd/errors.hpp"
#include "tidfd/filter.hpp"
#include "tidfd/frame.hpp"

using namespace tidfd;

namespace {

MultiplierBank unit_bank(std::size_t n, Complex value = 1.0) {
  return MultiplierBank({0}, {Spectrum::from_frequency(n, [&](int) { return value; }, value.imag() == 0.0)});
}

MultiplierBank random_positive_bank(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.2, 2.0);
  std::vector<Spectrum> ms;
  for (int l = 0; l < 3; ++l) {
    std::vector<double> half(n / 2 + 1);
    for (double& h : half) h = d(rng);
    ms.push_back(Spectrum::from_frequency(n, [&](int k) -> Complex { return half[std::abs(k)]; }, true));
  }
  return MultiplierBank({1, 2, 3}, std::move(ms));
}

double coefficient_energy_oracle(const MultiplierBank& bank, const Signal& f) {
  double s = 0.0;
  const int n = static_cast<int>(f.size());
  for (std::size_t l = 0; l < bank.size(); ++l) {
    for (int k = -n / 2; k < n / 2; ++k) s += std::norm(bank[l].at(k)) * std::norm(oracle::dft_coefficient(f, k));
  }
  return s;
}

}  // namespace

TEST_CASE("bank construction errors") {
  CHECK_THROWS_AS(MultiplierBank({}, {}), DegenerateFrame);
  CHECK_THROWS_AS(MultiplierBank({1, 2}, {Spectrum::zeros(8)}), LabelMismatch);
  CHECK_THROWS_AS(MultiplierBank({1, 1}, {Spectrum::zeros(8), Spectrum::zeros(8)}), LabelMismatch);
  CHECK_THROWS_AS(MultiplierBank({1, 2}, {Spectrum::zeros(8), Spectrum::zeros(16)}), SizeMismatch);
}

TEST_CASE("analysis with a single unit multiplier returns the signal") {
  const Signal f = oracle::random_signal(32, 1);
  const CoefficientFamily c = analysis(unit_bank(32), f);
  REQUIRE(c.size() == 1);
  CHECK(l2_norm(c[0] - f) < 1e-14);
  CHECK(l2_norm(synthesis(unit_bank(32), c) - f) < 1e-14);
}

TEST_CASE("analysis of cos(2 pi x) lives in the first Shannon scale") {
  const MultiplierBank bank = shannon_bank(64);
  const CoefficientFamily c = analysis(bank, oracle::sample(64, oracle::cos1));
  for (std::size_t l = 0; l < bank.size(); ++l) {
    // band j holds 2^{j-1} <= |k| < 2^j, so k = 1 belongs to j = 1 only
    const bool holds_k1 = (1 << (bank.scales()[l] - 1)) <= 1 && 1 < (1 << bank.scales()[l]);
    if (holds_k1) CHECK(l2_norm(c[l]) > 0.1);
    else CHECK(l2_norm(c[l]) < 1e-15);
  }
}

TEST_CASE("coefficient energy matches the spectral sum") {
  for (const MultiplierBank& bank : {shannon_bank(64), meyer_bank(64), random_positive_bank(64, 3)}) {
    const Signal f = oracle::random_signal(64, 9);
    const double c2 = std::pow(norm(analysis(bank, f)), 2);
    const double ref = coefficient_energy_oracle(bank, f);
    CHECK(std::abs(c2 - ref) <= 1e-12 * ref);
  }
}

TEST_CASE("synthesis of zero coefficients is zero") {
  const MultiplierBank bank = shannon_bank(32);
  std::vector<Signal> zs(bank.size(), Signal::zeros(32));
  CHECK(l2_norm(synthesis(bank, CoefficientFamily(bank.scales(), zs))) == 0.0);
}

TEST_CASE("synthesis is the adjoint of analysis") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MultiplierBank bank = seed % 2 ? meyer_bank(128) : random_positive_bank(128, seed);
    const Signal f = oracle::random_signal(128, seed);
    std::vector<Signal> cs;
    for (std::size_t l = 0; l < bank.size(); ++l) cs.push_back(oracle::random_signal(128, 1000 + seed * 10 + l));
    const CoefficientFamily c(bank.scales(), cs);
    // direct sums for both inner products
    double lhs = 0.0;
    const CoefficientFamily a = analysis(bank, f);
    for (std::size_t l = 0; l < bank.size(); ++l) {
      for (std::size_t i = 0; i < 128; ++i) lhs += a[l][i] * c[l][i];
    }
    const Signal s = synthesis(bank, c);
    double rhs = 0.0;
    for (std::size_t i = 0; i < 128; ++i) rhs += f[i] * s[i];
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)) * 128);
  }
}

TEST_CASE("synthesis rejects mismatched labels") {
  const MultiplierBank bank = shannon_bank(16);
  CHECK_THROWS_AS(synthesis(bank, CoefficientFamily({7}, {Signal::zeros(16)})), LabelMismatch);
}

TEST_CASE("Shannon frame bounds are (1, 1)") {
  const FrameBounds b = frame_bounds(shannon_bank(512), true);
  CHECK(std::abs(b.lower - 1.0) <= 1e-12);
  CHECK(std::abs(b.upper - 1.0) <= 1e-12);
}

TEST_CASE("odd/even partition bank is tight") {
  const std::size_t n = 64;
  const Spectrum odd = Spectrum::from_frequency(n, [](int k) -> Complex { return std::abs(k) % 2 == 1 ? 1.0 : 0.0; }, true);
  const Spectrum even =
      Spectrum::from_frequency(n, [](int k) -> Complex { return k != 0 && k % 2 == 0 ? 1.0 : 0.0; }, true);
  const MultiplierBank bank({1, 2}, {odd, even});
  const FrameBounds b = frame_bounds(bank, true);
  CHECK(b.lower == 1.0);
  CHECK(b.upper == 1.0);
  const FrameBounds s = frame_bounds(bank.scaled(2.0), true);
  CHECK(s.lower == doctest::Approx(4.0));
  CHECK(s.upper == doctest::Approx(4.0));
}

TEST_CASE("frame bounds scale quadratically") {
  const MultiplierBank bank = random_positive_bank(64, 4);
  const FrameBounds b = frame_bounds(bank);
  const FrameBounds s = frame_bounds(bank.scaled(2.0));
  CHECK(s.lower == doctest::Approx(4.0 * b.lower).epsilon(1e-14));
  CHECK(s.upper == doctest::Approx(4.0 * b.upper).epsilon(1e-14));
}

TEST_CASE("a bank with a hole is degenerate") {
  const Spectrum hole = Spectrum::from_frequency(16, [](int k) -> Complex { return std::abs(k) == 3 ? 0.0 : 1.0; }, true);
  CHECK_THROWS_AS(frame_bounds(MultiplierBank({1}, {hole})), DegenerateFrame);
  CHECK_THROWS_AS(canonical_dual(MultiplierBank({1}, {hole})), DegenerateFrame);
}

TEST_CASE("frame inequality on random zero-mean signals") {
  for (const MultiplierBank& bank : {shannon_bank(128), meyer_bank(128), random_positive_bank(128, 8)}) {
    const FrameBounds b = frame_bounds(bank);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Signal f = oracle::random_signal(128, seed);
      f -= Signal(std::vector<double>(128, f.mean()));
      const double f2 = std::pow(l2_norm(f), 2);
      const double c2 = std::pow(norm(analysis(bank, f)), 2);
      CHECK(c2 >= b.lower * f2 * (1 - 1e-12));
      CHECK(c2 <= b.upper * f2 * (1 + 1e-12));
    }
  }
}

TEST_CASE("canonical dual") {
  const MultiplierBank shannon = shannon_bank(64);
  const MultiplierBank dual = canonical_dual(shannon);
  for (std::size_t l = 0; l < shannon.size(); ++l) {
    for (int k = -32; k < 32; ++k) {
      if (k != 0) CHECK(std::abs(dual[l].at(k) - shannon[l].at(k)) < 1e-15);
    }
  }
  const MultiplierBank two = unit_bank(16, 2.0);
  const MultiplierBank half = canonical_dual(two);
  for (int k = -8; k < 8; ++k) {
    if (k != 0) CHECK(std::abs(half[0].at(k) - 0.5) < 1e-15);
  }
}

TEST_CASE("canonical dual satisfies the dual identity pointwise") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MultiplierBank u = random_positive_bank(64, seed);
    const MultiplierBank w = canonical_dual(u);
    for (int k = -32; k < 32; ++k) {
      if (k == 0) continue;
      double s = 0.0;
      for (std::size_t l = 0; l < u.size(); ++l) s += std::norm(u[l].at(k));
      Complex sum = 0.0;
      for (std::size_t l = 0; l < u.size(); ++l) {
        // pointwise division oracle: w = u / S
        CHECK(std::abs(w[l].at(k) - u[l].at(k) / s) < 1e-14);
        sum += w[l].at(k) * std::conj(u[l].at(k));
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
    CHECK(verify_dual(u, w) <= 1e-12);
  }
}

TEST_CASE("verify_dual") {
  CHECK(verify_dual(shannon_bank(512), shannon_bank(512)) <= 1e-12);
  CHECK(verify_dual(meyer_bank(512), canonical_dual(meyer_bank(512))) <= 1e-12);
  CHECK(verify_dual(shannon_bank(64), shannon_bank(64).scaled(2.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(verify_dual(shannon_bank(64), shannon_bank(32)), LabelMismatch);
}

TEST_CASE("Shannon bands for N = 16") {
  const MultiplierBank bank = shannon_bank(16);
  CHECK(bank.scales() == std::vector<int>{1, 2, 3});
  CHECK(bank.dyadic());
  const std::vector<std::vector<int>> bands{{1}, {2, 3}, {4, 5, 6, 7, 8}};
  for (std::size_t l = 0; l < 3; ++l) {
    for (int k = -8; k < 8; ++k) {
      const bool in = std::find(bands[l].begin(), bands[l].end(), std::abs(k)) != bands[l].end();
      CHECK(bank[l].at(k) == Complex(in ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("Shannon bank partitions the nonzero frequencies") {
  const MultiplierBank bank = shannon_bank(512);
  CHECK(bank.scales().size() == 8);
  for (int k = -256; k < 256; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l < bank.size(); ++l) s += std::norm(bank[l].at(k));
    CHECK(s == (k == 0 ? 0.0 : 1.0));
  }
  CHECK_THROWS_AS(shannon_bank(64, 0), BadScaleRange);
  CHECK_THROWS_AS(shannon_bank(64, 6), BadScaleRange);
}

TEST_CASE("Meyer transition polynomial") {
  CHECK(meyer_transition(0.0) == 0.0);
  CHECK(meyer_transition(1.0) == 1.0);
  CHECK(meyer_transition(-0.5) == 0.0);
  CHECK(meyer_transition(1.5) == 1.0);
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    CHECK(meyer_transition(t) + meyer_transition(1.0 - t) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("Meyer bank is tight with adjacent overlap only") {
  const MultiplierBank bank = meyer_bank(512);
  const FrameBounds b = frame_bounds(bank);
  CHECK(std::abs(b.lower - 1.0) <= 1e-10);
  CHECK(std::abs(b.upper - 1.0) <= 1e-10);
  for (std::size_t a = 0; a < bank.size(); ++a) {
    for (std::size_t c = a + 2; c < bank.size(); ++c) {
      for (int k = -256; k < 256; ++k) CHECK(std::abs(bank[a].at(k) * bank[c].at(k)) == 0.0);
    }
  }
}

TEST_CASE("decimated analysis of cos(2 pi x) at N = 8") {
  const MultiplierBank bank = shannon_bank(8);
  const Signal f = oracle::sample(8, oracle::cos1);
  const DecimatedCoefficients d = decimated_analysis(bank, f);
  const CoefficientFamily full = analysis(bank, f);
  REQUIRE(d.scales.size() == 2);
  CHECK(d.scales[0].scale == 1);
  CHECK(d.scales[0].stride == 2);
  REQUIRE(d.scales[0].samples.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d.scales[0].samples[i] == doctest::Approx(full[0][2 * i]));
  for (std::size_t s = 1; s < 2; ++s) {
    for (double v : d.scales[s].samples) CHECK(std::abs(v) < 1e-15);
  }
}

TEST_CASE("stride-one scale reproduces analysis") {
  const MultiplierBank bank = shannon_bank(64);
  const Signal f = oracle::random_signal(64, 2);
  const DecimatedCoefficients d = decimated_analysis(bank, f);
  const CoefficientFamily full = analysis(bank, f);
  bool seen = false;
  for (std::size_t l = 0; l < bank.size(); ++l) {
    if (d.scales[l].stride != 1) continue;
    seen = true;
    for (std::size_t i = 0; i < 64; ++i) CHECK(d.scales[l].samples[i] == doctest::Approx(full[l][i]).epsilon(1e-14));
  }
  CHECK(seen);
}

TEST_CASE("decimated transform reconstructs perfectly") {
  for (const MultiplierBank& bank : {shannon_bank(512), meyer_bank(512)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Signal f = oracle::random_admissible(512, seed);
      const Signal back = decimated_synthesis(bank, decimated_analysis(bank, f));
      CHECK(l2_norm(back - f) <= 1e-10 * l2_norm(f));
    }
    DecimatedCoefficients zero = decimated_analysis(bank, Signal::zeros(512));
    CHECK(l2_norm(decimated_synthesis(bank, zero)) == 0.0);
  }
}

TEST_CASE("thresholded decimated transform is not shift-equivariant") {
  const MultiplierBank bank = shannon_bank(128);
  const Signal f = oracle::random_admissible(128, 21);
  auto rec = [&](const Signal& g) {
    DecimatedCoefficients d = decimated_analysis(bank, g);
    for (auto& s : d.scales) {
      for (double& v : s.samples) v = soft_threshold(0.2, v);
    }
    return decimated_synthesis(bank, d);
  };
  double worst = 0.0;
  for (long m = 1; m < 16; ++m) worst = std::max(worst, l2_norm(rec(shift(f, m)) - shift(rec(f), m)));
  CHECK(worst > 1e-3);
}

TEST_CASE("decimated transform errors") {
  const Spectrum bumpy = Spectrum::from_frequency(16, [](int k) -> Complex { return k == 0 ? 0.0 : 1.0; }, true);
  CHECK_THROWS_AS(decimated_analysis(MultiplierBank({1}, {bumpy}), Signal::zeros(16)), NonDyadicBank);
  const MultiplierBank bank = shannon_bank(16);
  DecimatedCoefficients d = decimated_analysis(bank, oracle::random_admissible(16, 1));
  d.scales[0].stride = 1;
  CHECK_THROWS_AS(decimated_synthesis(bank, d), StrideMismatch);
}

TEST_CASE("bank csv lists every bin") {
  std::stringstream ss;
  write_bank_csv(ss, shannon_bank(8));
  std::string line;
  std::getline(ss, line);
  CHECK(line == "scale,k,re,im");
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  CHECK(rows == 2 * 8);
}
