#pragma once

// Translation-invariant diagonal frame decompositions (u_l, v_l, kappa_l) of a
// Fourier-diagonal operator K:
//   (TI1) (u_l) is a TI-frame,
//   (TI2) (v_l) is a TI-frame on the range of K,
//   (TI3) v_l* * (K f) = kappa_l (u_l* * f).
// The inverse is reproduced by K^{-1} g = sum_l w_l * (kappa_l^{-1} v_l* * g)
// for any dual bank (w_l) of (u_l).

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tidfd/frame.hpp"
#include "tidfd/operator.hpp"

namespace tidfd {

class TIDFD {
 public:
  TIDFD(MultiplierBank u_bank, MultiplierBank v_bank, std::vector<double> kappas);

  const MultiplierBank& u_bank() const { return u_bank_; }
  const MultiplierBank& v_bank() const { return v_bank_; }
  const std::vector<double>& kappas() const { return kappas_; }
  const std::vector<int>& scales() const { return u_bank_.scales(); }
  std::size_t size() const { return kappas_.size(); }
  std::size_t grid_size() const { return u_bank_.grid_size(); }

  /// Copy with kappa_l replaced; v_bank unchanged (used to probe (TI3)).
  TIDFD with_kappas(std::vector<double> kappas) const;

 private:
  MultiplierBank u_bank_;
  MultiplierBank v_bank_;
  std::vector<double> kappas_;
};

/// Normalized support of a dyadic bank: the extremes of 2^{-j}|w_k| over all
/// frequencies where some u_j is nonzero.
struct BandEnvelope {
  double a;
  double b;
};
BandEnvelope band_envelope(const MultiplierBank& u_bank);

/// TI-WVD for integration: kappa_j = 2^{-j}, v_j(k) = kappa_j (-i w_k) u_j(k).
/// Throws NonDyadicBank, DegenerateFrame (u_bank not a TI-frame) or
/// UnboundedVaguelette (a band touches DC, so a = 0).
TIDFD build_ti_wvd(const MultiplierBank& u_bank);

struct TIDFDReport {
  FrameBounds ti1_bounds;
  FrameBounds ti2_bounds;
  /// max over trials and labels of ||v_l* * K f - kappa_l u_l* * f|| / ||kappa_l u_l* * f||
  double ti3_residual;
};

TIDFDReport verify_tidfd(const TIDFD& dfd, const DiagonalOperator& op, int trials, std::uint64_t seed = 1);

/// sum_l w_l * (kappa_l^{-1} v_l* * g). Requires verify_dual(u, w) <= 1e-10
/// (DualMismatch) and an admissible g (DomainViolation).
Signal exact_inverse(const TIDFD& dfd, const MultiplierBank& w_bank, const Signal& g);

enum class Verdict { bounded, ill_posed };

struct IllPosednessReport {
  double kappa_min;
  double kappa_max;
  /// min over labels of max_k |v_l(k)|
  double v_norm_min;
  Verdict verdict;
};

/// ill_posed iff kappa_min <= 2^-4 kappa_max and v_norm_min > 0.
IllPosednessReport illposedness_report(const TIDFD& dfd);
inline constexpr double kIllPosedRatio = 1.0 / 16.0;

/// rho(f, mu) = (sum_l kappa_l^{-4 mu} ||u_l* * f||^2)^{1/2}, the smallest rho
/// with u_l* * f = kappa_l^{2 mu} h_l and ||h|| <= rho.
double source_norm(const TIDFD& dfd, const Signal& f, double mu);

/// CSV rows `scale,kappa`.
void write_kappa_csv(std::ostream& os, const TIDFD& dfd);

namespace detail {
void require_dual(const MultiplierBank& u_bank, const MultiplierBank& w_bank);
void require_admissible(const Signal& g, const char* where);
}  // namespace detail

}  // namespace tidfd
