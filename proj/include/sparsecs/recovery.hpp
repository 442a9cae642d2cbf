#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sparsecs/sensing.hpp"
#include "sparsecs/spectral_core.hpp"

namespace sparsecs {

/// Output of every recovery algorithm. `spectrum` is on amplitude scale and is
/// zero outside `support`.
struct RecoveryResult {
  ComplexVector spectrum;
  std::vector<int> support;
  int iterations = 0;
  double residual_norm = 0.0;
};

// ---------------------------------------------------------------------------
// Orthogonal matching pursuit

struct OmpConfig {
  int k_components = 1;
  double residual_tol = 0.0;  // 0 disables the early stop
};

/// Canonical OMP: greedy column selection by |⟨r, Ω_i⟩|, least squares of d on
/// the selected columns, residual d − Ω_S·f_S. Stops after k_components picks
/// or once the residual norm drops to residual_tol (or to rounding level).
RecoveryResult omp_recover(const MeasurementSet& ms, const SensingOperator& op,
                           const OmpConfig& cfg);

// ---------------------------------------------------------------------------
// Iterative hard thresholding

struct IhtConfig {
  int k_components = 1;
  int max_iters = 1000;
  double eps = 1e-4;  // stop once ‖d − Ωf‖₂ < eps (raw measurement units)
  /// Gradient step. Unset means 1/Na on a unit_exponential operator and 1 on
  /// a unit_norm operator (the same step in amplitude terms).
  std::optional<double> step_mu;
};

/// Keeps the k largest-magnitude entries of x. Ties go to the lower index.
ComplexVector hard_threshold(const ComplexVector& x, int k);

/// Step actually used for `op`.
double effective_step(const IhtConfig& cfg, const SensingOperator& op);

/// μ·λ_max(Ω^HΩ). Values below 2 guarantee monotone descent of the
/// unconstrained gradient step. For partial-Fourier rows λ_max is exactly N
/// (unit_exponential), so the default 1/Na step sits above this bound whenever
/// Na < N/2 and relies on the restricted isometry of sparse iterates instead.
double descent_bound(double step_mu, const SensingOperator& op);

/// f⁰ = 0; f ← H_k(f + μ·Ω^H(d − Ωf)) until the iteration count reaches
/// max_iters or the residual norm falls below eps. Throws
/// Error(ErrorKind::divergence) if the residual climbs past 10× its minimum.
RecoveryResult iht_recover(const MeasurementSet& ms, const SensingOperator& op,
                           const IhtConfig& cfg);

// ---------------------------------------------------------------------------
// Single-iteration reconstruction

enum class ThresholdForm {
  literature,    // sqrt(−var·ln(1 − P^{1/N}))
  literal_eq13,  // (1/N)·sqrt(−var²·log10(1 − sqrt(P)))
};

enum class EnergyMode {
  estimate_from_samples,
  known_amplitudes,
};

struct SiraConfig {
  double p_detect = 0.99;
  ThresholdForm threshold_form = ThresholdForm::literature;
  EnergyMode energy_mode = EnergyMode::estimate_from_samples;
  std::optional<double> known_energy;  // required iff energy_mode == known_amplitudes
};

/// DFT over the available samples only (missing samples contribute zero).
Spectrum initial_dft(const MeasurementSet& ms);

/// ΣA_i², either supplied or estimated as the mean power of the samples.
double sira_signal_energy(const MeasurementSet& ms, const SiraConfig& cfg);

/// Variance of a non-signal initial-DFT bin: (N − Na)·Na/(N − 1)·energy.
double sira_variance(int n, int na, double energy);

double sira_threshold(double variance, int n, double p_detect, ThresholdForm form);

/// Bins with |V[k]| strictly above t, ascending.
std::vector<int> detect_support(const Spectrum& v, double t);

struct LeastSquaresSolution {
  ComplexVector coefficients;
  double residual_norm = 0.0;
};

/// Minimizes ‖a_cs·X − v‖₂ with a column-pivoting QR. Rank deficiency throws
/// SingularSystemError; more columns than rows throws ErrorKind::underdetermined.
LeastSquaresSolution solve_amplitudes(const ComplexMatrix& a_cs, const ComplexVector& v);

/// initial DFT → energy → variance → threshold → support → least squares.
/// Single pass; iterations = 1.
RecoveryResult sira_recover(const MeasurementSet& ms, const SiraConfig& cfg);

/// Least-squares amplitudes on a known support. Test reference.
ComplexVector oracle_solve(const MeasurementSet& ms, std::span<const int> true_support);

}  // namespace sparsecs
