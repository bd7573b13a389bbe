#pragma once

// Filtered TI-DFD reconstruction
//   R_alpha g = sum_l w_l * (Phi_alpha(kappa_l) (v_l* * g)),
// its soft-thresholded and decimated counterparts, a-priori parameter choice
// and probes for the norm bound and the order-optimality construction.

#include <cstdint>
#include <string>
#include <vector>

#include "tidfd/dfd.hpp"
#include "tidfd/filter.hpp"

namespace tidfd {

struct ReconstructionReport {
  Signal reconstruction;
  double alpha;
  std::string filter_name;
  /// ||Phi_alpha(kappa_l) (v_l* * g)|| per label
  std::vector<double> per_scale_energy;
  /// ||Phi_alpha||_inf ||W|| ||V||, an upper bound for ||R_alpha||
  double norm_bound;
};

/// How the vaguelette coefficients v_j* * g are obtained.
enum class VagueletteRoute {
  /// conj(v_j) F g
  spectral,
  /// kappa_j d/dx (u_j* * g): differentiate the wavelet coefficients
  differentiated_wavelet,
};

/// Throws BadAlpha (alpha <= 0), DualMismatch, DomainViolation.
ReconstructionReport filtered_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, const FilterSpec& filter,
                                          double alpha, const Signal& g,
                                          VagueletteRoute route = VagueletteRoute::spectral);

/// v_l* * g for every label along the chosen route.
CoefficientFamily vaguelette_coefficients(const TIDFD& dfd, const Signal& g,
                                          VagueletteRoute route = VagueletteRoute::spectral);

/// Soft thresholds soft(2^{-j} beta, v_j* * g), rescaled by 1/kappa_j and
/// synthesized with w. beta = 0 gives exact_inverse.
Signal thresholded_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, double beta, const Signal& g);

struct DecimatedMode {
  enum class Kind { tikhonov, soft };
  Kind kind;
  /// alpha for tikhonov, beta for soft
  double parameter;

  static DecimatedMode tikhonov(double alpha) { return {Kind::tikhonov, alpha}; }
  static DecimatedMode soft(double beta) { return {Kind::soft, beta}; }
};

/// Same pipeline with the vaguelette coefficients sampled by
/// decimated_analysis and recombined by decimated_synthesis.
Signal decimated_reconstruct(const TIDFD& dfd, const MultiplierBank& w_bank, DecimatedMode mode, const Signal& g);

/// c (delta / rho)^{2 / (2 mu + 1)}
double a_priori_alpha(double delta, double rho, double mu, double c = 1.0);

struct WorstCaseProbe {
  Signal f;
  double delta;
  double norm_f;
  /// norm_f / (delta^{2mu/(2mu+1)} rho^{1/(2mu+1)})
  double constant;
};

/// f_n = rho kappa_n^{2mu} e_n with e_n a single cosine at the lowest
/// frequency of band n, normalized so ||u_n* * e_n|| = 1; delta_n = ||K f_n||.
/// Throws BandOverlap unless the bank's bands are pairwise disjoint.
WorstCaseProbe worst_case_probe(const TIDFD& dfd, const DiagonalOperator& op, double mu, double rho, int scale);

struct NormBoundProbe {
  double empirical;
  double bound;
};

/// empirical = max over random unit-norm admissible g of ||R_alpha g||.
NormBoundProbe norm_bound_probe(const TIDFD& dfd, const MultiplierBank& w_bank, const FilterSpec& filter,
                                double alpha, int trials, std::uint64_t seed = 7);

}  // namespace tidfd
