#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sparsecs/errors.hpp"
#include "sparsecs/recovery.hpp"
#include "operator_check.hpp"

namespace sparsecs {
namespace detail {

void check_operator_matches(const MeasurementSet& ms, const SensingOperator& op) {
  if (op.length() != ms.length() || op.positions() != ms.positions()) {
    throw Error(ErrorKind::dimension_mismatch, "operator positions differ from the measurement set");
  }
}

}  // namespace detail

RecoveryResult omp_recover(const MeasurementSet& ms, const SensingOperator& op,
                           const OmpConfig& cfg) {
  detail::check_operator_matches(ms, op);
  if (cfg.k_components < 1 || cfg.k_components > ms.count()) {
    throw Error(ErrorKind::invalid_argument,
                "OMP budget " + std::to_string(cfg.k_components) + " outside [1, Na]");
  }
  if (cfg.residual_tol < 0.0) {
    throw Error(ErrorKind::invalid_argument, "OMP residual tolerance must be nonnegative");
  }

  const int n = op.length();
  const ComplexVector& d = ms.values();
  ComplexVector residual = d;
  std::vector<int> selected;
  std::vector<bool> in_support(static_cast<std::size_t>(n), false);
  ComplexMatrix columns(op.rows(), 0);
  ComplexVector coefficients;

  // A residual at rounding level counts as zero. Past that point every
  // correlation is noise and the pick can alias a selected column.
  const double zero_residual = 1e3 * std::numeric_limits<double>::epsilon() * d.norm();

  RecoveryResult out;
  out.residual_norm = residual.norm();
  while (static_cast<int>(selected.size()) < cfg.k_components) {
    if (out.residual_norm <= std::max(cfg.residual_tol, zero_residual)) break;

    const ComplexVector correlation = op.adjoint_apply(residual);
    int best = -1;
    double best_mag = -1.0;
    for (int k = 0; k < n; ++k) {
      if (in_support[static_cast<std::size_t>(k)]) continue;
      const double mag = std::abs(correlation[k]);
      if (mag > best_mag) {
        best = k;
        best_mag = mag;
      }
    }
    selected.push_back(best);
    in_support[static_cast<std::size_t>(best)] = true;
    columns.conservativeResize(Eigen::NoChange, columns.cols() + 1);
    columns.col(columns.cols() - 1) = op.matrix().col(best);

    try {
      auto ls = solve_amplitudes(columns, d);
      coefficients = std::move(ls.coefficients);
      out.residual_norm = ls.residual_norm;
    } catch (const SingularSystemError& e) {
      std::vector<int> so_far = selected;
      std::sort(so_far.begin(), so_far.end());
      throw SingularSystemError(std::string("OMP: ") + e.what(), std::move(so_far));
    }
    residual = d - columns * coefficients;
    ++out.iterations;
  }

  out.spectrum = ComplexVector::Zero(n);
  for (std::size_t j = 0; j < selected.size(); ++j) {
    out.spectrum[selected[j]] = coefficients[static_cast<Eigen::Index>(j)] * op.amplitude_factor();
  }
  out.support = selected;
  std::sort(out.support.begin(), out.support.end());
  return out;
}

}  // namespace sparsecs
