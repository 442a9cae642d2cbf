#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sparsecs {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// One complex exponential e^{+j2π·bin·n/N} weighted by `amplitude`.
struct Component {
  int bin = 0;
  Complex amplitude{};
};

/// Sparse frequency-domain description of a multicomponent signal.
///
/// Bins must lie in [0, length_n) and be pairwise distinct; an empty
/// component list describes the zero signal. Violations throw
/// Error(ErrorKind::invalid_spec) from the constructor, so every live
/// SignalSpec is valid.
class SignalSpec {
 public:
  SignalSpec(int length_n, std::vector<Component> components);

  int length() const noexcept { return length_n_; }
  int sparsity() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Component>& components() const noexcept { return components_; }

  /// Component bins in ascending order.
  std::vector<int> support() const;

  /// Length-N amplitude-scale coefficient vector (A_k at its bin, 0 elsewhere).
  ComplexVector amplitudes() const;

  /// Sum of squared component magnitudes.
  double energy() const;

 private:
  int length_n_;
  std::vector<Component> components_;
};

/// The seven-component N=512 benchmark signal used throughout the bench suite.
SignalSpec benchmark_spec();

struct TimeSignal {
  ComplexVector samples;

  int length() const noexcept { return static_cast<int>(samples.size()); }
};

enum class SpectrumScale {
  raw,        // forward-DFT units: a component contributes N·A_k
  amplitude,  // raw divided by N
};

struct Spectrum {
  ComplexVector bins;
  SpectrumScale scale = SpectrumScale::raw;

  int length() const noexcept { return static_cast<int>(bins.size()); }
};

/// Table of e^{+j2π·m/N}, m = 0…N−1. Products k·n are reduced mod N before
/// lookup so every twiddle is evaluated at an argument in [0, 2π).
class UnitRoots {
 public:
  explicit UnitRoots(int n);

  int size() const noexcept { return static_cast<int>(roots_.size()); }

  /// e^{+j2π·k·n/N}
  Complex positive(long long k, long long n) const noexcept {
    return roots_[static_cast<std::size_t>(reduce(k * n))];
  }
  /// e^{−j2π·k·n/N}
  Complex negative(long long k, long long n) const noexcept { return std::conj(positive(k, n)); }

 private:
  long long reduce(long long m) const noexcept {
    const long long n = static_cast<long long>(roots_.size());
    m %= n;
    return m < 0 ? m + n : m;
  }

  std::vector<Complex> roots_;
};

TimeSignal generate_signal(const SignalSpec& spec);

/// Unnormalized forward DFT: X[k] = Σ_n x[n]·e^{−j2πkn/N}.
Spectrum dft(const TimeSignal& signal);

/// Inverse of dft(); requires a raw-scale spectrum.
TimeSignal idft(const Spectrum& spectrum);

/// Rescales a raw spectrum to amplitude units (divide by N). Amplitude input
/// is returned unchanged.
Spectrum to_amplitude_scale(const Spectrum& spectrum);

}  // namespace sparsecs
