#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sparsecs/spectral_core.hpp"

namespace sparsecs {

/// Available time samples: strictly increasing positions in [0, N) and the
/// signal values observed there.
class MeasurementSet {
 public:
  MeasurementSet(int length_n, std::vector<int> positions, ComplexVector values);

  int length() const noexcept { return length_n_; }
  int count() const noexcept { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const noexcept { return positions_; }
  const ComplexVector& values() const noexcept { return values_; }

 private:
  int length_n_;
  std::vector<int> positions_;
  ComplexVector values_;
};

enum class ColumnScaling {
  unit_exponential,  // entries e^{+j2π·k·t/N}, magnitude 1
  unit_norm,         // entries divided by √Na, unit-norm columns
};

/// Dense Na×N partial inverse-DFT operator: row a samples the time instant
/// positions[a], column k is the exponential at bin k.
class SensingOperator {
 public:
  SensingOperator(int length_n, std::vector<int> positions, ColumnScaling scaling);

  int length() const noexcept { return length_n_; }
  int rows() const noexcept { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const noexcept { return positions_; }
  ColumnScaling scaling() const noexcept { return scaling_; }
  const ComplexMatrix& matrix() const noexcept { return entries_; }

  /// Multiplier taking a coefficient on this operator's columns to amplitude
  /// units: 1 for unit_exponential, 1/√Na for unit_norm.
  double amplitude_factor() const noexcept;

  ComplexVector apply(const ComplexVector& x) const;
  /// Ω^H·y (conjugate transpose).
  ComplexVector adjoint_apply(const ComplexVector& y) const;
  /// Columns at `support`, in the order given. Indices must be distinct and in range.
  ComplexMatrix restrict_columns(std::span<const int> support) const;

 private:
  int length_n_;
  std::vector<int> positions_;
  ColumnScaling scaling_;
  ComplexMatrix entries_;
};

/// Uniform random subset of m_samples positions (without replacement),
/// determined entirely by seed.
MeasurementSet sample_uniform(const TimeSignal& signal, int m_samples, std::uint64_t seed);

/// Positions only; the same draw sample_uniform makes for (N, m, seed).
std::vector<int> draw_positions(int length_n, int m_samples, std::uint64_t seed);

SensingOperator build_operator(std::span<const int> positions, int length_n,
                               ColumnScaling scaling = ColumnScaling::unit_exponential);

/// Columns of the unit_exponential operator at `support` for the given time
/// positions, without materializing the full Na×N matrix.
ComplexMatrix partial_fourier_columns(std::span<const int> positions, int length_n,
                                      std::span<const int> support);

/// CSV with header `position,re,im`, positions ascending.
void write_measurements_csv(std::ostream& out, const MeasurementSet& ms);
MeasurementSet read_measurements_csv(std::istream& in, int length_n);

}  // namespace sparsecs
