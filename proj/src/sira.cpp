#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sparsecs/errors.hpp"
#include "sparsecs/recovery.hpp"

namespace sparsecs {

Spectrum initial_dft(const MeasurementSet& ms) {
  const int n = ms.length();
  const UnitRoots roots(n);
  Spectrum v{ComplexVector::Zero(n), SpectrumScale::raw};
  for (int a = 0; a < ms.count(); ++a) {
    const Complex sample = ms.values()[a];
    const int step = ms.positions()[static_cast<std::size_t>(a)];
    // index tracks f·position mod N
    int index = 0;
    for (int f = 0; f < n; ++f) {
      v.bins[f] += sample * roots.negative(index, 1);
      index += step;
      if (index >= n) index -= n;
    }
  }
  return v;
}

double sira_signal_energy(const MeasurementSet& ms, const SiraConfig& cfg) {
  if (cfg.energy_mode == EnergyMode::known_amplitudes) {
    if (!cfg.known_energy || *cfg.known_energy < 0.0) {
      throw Error(ErrorKind::invalid_argument,
                  "known_amplitudes mode needs a nonnegative known_energy");
    }
    return *cfg.known_energy;
  }
  return ms.values().squaredNorm() / ms.count();
}

double sira_variance(int n, int na, double energy) {
  if (na < 1 || na > n) {
    throw Error(ErrorKind::invalid_argument, "available sample count outside [1, N]");
  }
  if (na == n) return 0.0;
  return static_cast<double>(n - na) * na / (n - 1) * energy;
}

double sira_threshold(double variance, int n, double p_detect, ThresholdForm form) {
  if (variance < 0.0 || n < 1 || !(p_detect > 0.0 && p_detect < 1.0)) {
    throw Error(ErrorKind::invalid_argument, "threshold needs var >= 0, N >= 1, P in (0, 1)");
  }
  switch (form) {
    case ThresholdForm::literature: {
      // 1 − P^{1/N}, evaluated without cancellation
      const double tail = -std::expm1(std::log(p_detect) / n);
      return std::sqrt(-variance * std::log(tail));
    }
    case ThresholdForm::literal_eq13:
      return std::sqrt(-variance * variance * std::log10(1.0 - std::sqrt(p_detect))) / n;
  }
  return 0.0;
}

std::vector<int> detect_support(const Spectrum& v, double t) {
  if (t < 0.0) throw Error(ErrorKind::invalid_argument, "threshold must be nonnegative");
  std::vector<int> support;
  for (int k = 0; k < v.length(); ++k) {
    if (std::abs(v.bins[k]) > t) support.push_back(k);
  }
  return support;
}

RecoveryResult sira_recover(const MeasurementSet& ms, const SiraConfig& cfg) {
  const int n = ms.length();
  const int na = ms.count();

  const Spectrum v = initial_dft(ms);
  const double variance = sira_variance(n, na, sira_signal_energy(ms, cfg));
  // Below the rounding bound of the initial-DFT sums a bin is indistinguishable
  // from zero; this matters once var → 0 (Na → N).
  const double rounding_floor =
      std::numeric_limits<double>::epsilon() * na * ms.values().cwiseAbs().sum();
  const double threshold =
      std::max(sira_threshold(variance, n, cfg.p_detect, cfg.threshold_form), rounding_floor);
  std::vector<int> support = detect_support(v, threshold);
  if (support.empty()) {
    throw Error(ErrorKind::empty_support, "SIRA: no initial-DFT bin above threshold " +
                                              std::to_string(threshold));
  }
  if (static_cast<int>(support.size()) > na) {
    throw Error(ErrorKind::underdetermined, "SIRA: " + std::to_string(support.size()) +
                                                " detected bins exceed " + std::to_string(na) +
                                                " available samples");
  }

  const ComplexMatrix a_cs = partial_fourier_columns(ms.positions(), n, support);
  const LeastSquaresSolution ls = solve_amplitudes(a_cs, ms.values());

  RecoveryResult out;
  out.spectrum = ComplexVector::Zero(n);
  for (std::size_t j = 0; j < support.size(); ++j) {
    out.spectrum[support[j]] = ls.coefficients[static_cast<Eigen::Index>(j)];
  }
  out.support = std::move(support);
  out.iterations = 1;
  out.residual_norm = ls.residual_norm;
  return out;
}

}  // namespace sparsecs
