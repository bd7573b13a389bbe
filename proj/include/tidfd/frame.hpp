#pragma once

// Translation-invariant frames realized as banks of Fourier multipliers.
//
// A bank (u_l) acts through the analysis operator f -> (u_l* * f)_l and the
// synthesis operator (c_l) -> sum_l u_l * c_l. Under the 1/N DFT convention the
// frame condition reads A <= S(k) <= B with S(k) = sum_l |u_l(k)|^2, and a bank
// (w_l) is dual to (u_l) iff sum_l w_l(k) conj(u_l(k)) = 1 for every k != 0.
// No bank covers k = 0; frame statements hold on zero-mean signals.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tidfd/signal.hpp"

namespace tidfd {

class MultiplierBank {
 public:
  /// `dyadic` marks banks whose labels are dyadic scale indices j with
  /// multipliers localized around |k| ~ 2^j (required by the decimated
  /// transform and the TI-WVD construction).
  MultiplierBank(std::vector<int> scales, std::vector<Spectrum> multipliers, bool dyadic = false);

  std::size_t size() const { return scales_.size(); }
  std::size_t grid_size() const { return multipliers_.front().size(); }
  const std::vector<int>& scales() const { return scales_; }
  const std::vector<Spectrum>& multipliers() const { return multipliers_; }
  const Spectrum& operator[](std::size_t i) const { return multipliers_[i]; }
  bool dyadic() const { return dyadic_; }

  /// Bank with every multiplier multiplied by c.
  MultiplierBank scaled(double c) const;

 private:
  std::vector<int> scales_;
  std::vector<Spectrum> multipliers_;
  bool dyadic_;
};

/// One coefficient signal per bank label.
class CoefficientFamily {
 public:
  CoefficientFamily(std::vector<int> labels, std::vector<Signal> coeffs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Signal>& coeffs() const { return coeffs_; }
  const Signal& operator[](std::size_t i) const { return coeffs_[i]; }

 private:
  std::vector<int> labels_;
  std::vector<Signal> coeffs_;
};

/// sum_l <c_l, d_l>
double inner(const CoefficientFamily& c, const CoefficientFamily& d);
/// sqrt(sum_l ||c_l||^2)
double norm(const CoefficientFamily& c);

struct FrameBounds {
  double lower;
  double upper;
};

CoefficientFamily analysis(const MultiplierBank& bank, const Signal& f);
Signal synthesis(const MultiplierBank& bank, const CoefficientFamily& c);

/// Extremes of S(k) = sum_l |u_l(k)|^2 over k (k = 0 skipped when exclude_dc).
/// Throws DegenerateFrame if the lower bound is <= 1e-14.
FrameBounds frame_bounds(const MultiplierBank& bank, bool exclude_dc = true);

/// w_l = u_l / S on k != 0, zero at DC.
MultiplierBank canonical_dual(const MultiplierBank& bank);

/// max_{k != 0} |sum_l w_l(k) conj(u_l(k)) - 1|
double verify_dual(const MultiplierBank& u_bank, const MultiplierBank& w_bank);

/// max_k sqrt(S(k)): the operator norm of both analysis and synthesis.
double operator_norm(const MultiplierBank& bank);

/// Ideal dyadic bands: scale j covers 2^{j-1} <= |k| < 2^j, the Nyquist bin
/// belongs to the finest scale L-1, and for j_min > 1 the frequencies below
/// 2^{j_min-1} are folded into the coarsest scale. Exactly tight with bounds
/// (1, 1) on k != 0.
MultiplierBank shannon_bank(std::size_t n, int j_min = 1);

/// Smooth transition polynomial nu(t) = t^4 (35 - 84 t + 70 t^2 - 20 t^3),
/// clamped to [0, 1] outside the unit interval.
double meyer_transition(double t);

/// Meyer-type bank: band j is psi(|k| / 2^j) with the classical Meyer profile
/// psi supported on [1/3, 4/3]. The coarsest and finest scales absorb the
/// dilates that fall outside the scale range, so sum_j |u_j|^2 = 1 on k != 0.
MultiplierBank meyer_bank(std::size_t n);

// ------------------------------------------------------------------
// Decimated (sampled-convolution) transform.

struct DecimatedScale {
  int scale;
  std::size_t stride;
  std::vector<double> samples;
};

struct DecimatedCoefficients {
  std::size_t n;
  std::vector<DecimatedScale> scales;
};

/// Sampling stride that keeps the multiplier's alias images disjoint from its
/// own support: N / (smallest power of two > 2 max{|k| : m(k) != 0}), at least 1.
std::size_t decimation_stride(const Spectrum& multiplier);

/// d_{j,m} = (u_j* * f)(x_{m s_j}). Throws NonDyadicBank for non-dyadic banks.
DecimatedCoefficients decimated_analysis(const MultiplierBank& bank, const Signal& f);

/// sum_j w_j * (s_j * zero-insertion upsample of d_j). The multiplier w_j
/// rejects the alias images created by upsampling.
Signal decimated_synthesis(const MultiplierBank& bank, const DecimatedCoefficients& d);

/// CSV rows `scale,k,re,im` for every label and frequency.
void write_bank_csv(std::ostream& os, const MultiplierBank& bank);

}  // namespace tidfd
