#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sparsecs/errors.hpp"
#include "sparsecs/recovery.hpp"
#include "operator_check.hpp"

namespace sparsecs {

ComplexVector hard_threshold(const ComplexVector& x, int k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "hard threshold needs k >= 1");
  const auto n = static_cast<int>(x.size());
  if (k >= n) return x;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> mag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mag[static_cast<std::size_t>(i)] = std::abs(x[i]);
  const auto before = [&](int a, int b) {
    const double ma = mag[static_cast<std::size_t>(a)];
    const double mb = mag[static_cast<std::size_t>(b)];
    return ma > mb || (ma == mb && a < b);
  };
  std::nth_element(order.begin(), order.begin() + (k - 1), order.end(), before);

  ComplexVector out = ComplexVector::Zero(n);
  for (int i = 0; i < k; ++i) {
    const int idx = order[static_cast<std::size_t>(i)];
    out[idx] = x[idx];
  }
  return out;
}

double effective_step(const IhtConfig& cfg, const SensingOperator& op) {
  if (cfg.step_mu) return *cfg.step_mu;
  return op.scaling() == ColumnScaling::unit_norm ? 1.0 : 1.0 / op.rows();
}

double descent_bound(double step_mu, const SensingOperator& op) {
  // Rows of the partial DFT are orthogonal with squared norm N, so
  // ΩΩ^H = N·I and λ_max(Ω^HΩ) = N (times Na⁻¹ under unit_norm).
  const double lambda_max = op.scaling() == ColumnScaling::unit_norm
                                ? static_cast<double>(op.length()) / op.rows()
                                : static_cast<double>(op.length());
  return step_mu * lambda_max;
}

RecoveryResult iht_recover(const MeasurementSet& ms, const SensingOperator& op,
                           const IhtConfig& cfg) {
  detail::check_operator_matches(ms, op);
  if (cfg.k_components < 1 || cfg.max_iters < 1 || !(cfg.eps > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "IHT: k, max_iters and eps must be positive");
  }
  const double mu = effective_step(cfg, op);
  if (!(mu > 0.0)) throw Error(ErrorKind::invalid_argument, "IHT: step must be positive");

  const int n = op.length();
  const ComplexVector& d = ms.values();
  const ComplexMatrix& omega = op.matrix();

  ComplexVector f = ComplexVector::Zero(n);
  ComplexVector residual = d;
  double res = residual.norm();
  double min_res = res;

  RecoveryResult out;
  while (out.iterations < cfg.max_iters && res >= cfg.eps) {
    f = hard_threshold(f + mu * op.adjoint_apply(residual), cfg.k_components);

    // Ωf touches only the surviving columns.
    residual = d;
    for (int k = 0; k < n; ++k) {
      if (f[k] != Complex{}) residual.noalias() -= f[k] * omega.col(k);
    }
    res = residual.norm();
    ++out.iterations;
    min_res = std::min(min_res, res);
    if (!std::isfinite(res) || res > 10.0 * min_res) {
      throw Error(ErrorKind::divergence,
                  "IHT diverged at iteration " + std::to_string(out.iterations) +
                      " (step " + std::to_string(mu) + ")");
    }
  }

  out.spectrum = f * op.amplitude_factor();
  out.residual_norm = res;
  for (int k = 0; k < n; ++k) {
    if (f[k] != Complex{}) out.support.push_back(k);
  }
  return out;
}

}  // namespace sparsecs
