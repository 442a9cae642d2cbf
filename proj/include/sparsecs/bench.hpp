#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecs/recovery.hpp"
#include "sparsecs/spectral_core.hpp"

namespace sparsecs {

enum class Algorithm { iht, omp, sira };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct AlgorithmConfigs {
  OmpConfig omp{.k_components = 7};
  IhtConfig iht{.k_components = 7, .max_iters = 1000, .eps = 1e-4, .step_mu = std::nullopt};
  SiraConfig sira{};
};

struct ExperimentConfig {
  SignalSpec spec = benchmark_spec();
  std::vector<int> m_values;
  std::vector<std::uint64_t> seeds;
  std::vector<Algorithm> algorithms;
  AlgorithmConfigs configs;
};

/// One (algorithm, M, seed) trial.
struct ExperimentRecord {
  Algorithm algorithm = Algorithm::sira;
  int m = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;                // sparsity of the true signal
  double error = 0.0;       // max spectral error, amplitude scale
  double elapsed_seconds = 0.0;
  bool support_exact = false;
  int iterations = 0;
  bool failed = false;
  std::string failure;      // ErrorKind name when failed
};

/// max_k |p_true[k] − spectrum[k]| on amplitude scale.
double max_spectral_error(const SignalSpec& spec, const ComplexVector& spectrum);

/// Runs the named algorithm on `ms`. OMP and IHT build their unit_exponential
/// operator inside this call, so its wall time covers everything downstream of
/// the measurements for all three algorithms.
RecoveryResult recover(Algorithm algorithm, const MeasurementSet& ms,
                       const AlgorithmConfigs& configs);

struct TrialOutcome {
  ExperimentRecord record;
  std::optional<RecoveryResult> result;  // empty when the recovery failed
};

/// Signal generation → sampling (shared across algorithms for a given M and
/// seed) → timed recovery → scoring. Recovery errors set `failed` and score
/// the trial as if nothing had been recovered.
TrialOutcome run_trial_with_result(const SignalSpec& spec, Algorithm algorithm, int m,
                                   std::uint64_t seed, const AlgorithmConfigs& configs);
ExperimentRecord run_trial(const SignalSpec& spec, Algorithm algorithm, int m,
                           std::uint64_t seed, const AlgorithmConfigs& configs);

/// Every algorithm × M × seed cell, sorted by (algorithm name, m, seed).
/// `jobs` > 1 spreads trials over worker threads.
std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& config, int jobs = 1);

struct SummaryRow {
  Algorithm algorithm = Algorithm::sira;
  int m = 0;
  double error_median = 0.0;
  double error_q1 = 0.0;
  double error_q3 = 0.0;
  double time_median_s = 0.0;
  double success_rate = 0.0;
};

/// Linear-interpolation quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// A trial succeeds when it did not fail and its error is at most `tolerance`.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records,
                                  double success_tolerance = 1e-6);

struct SuccessCriterion {
  double tolerance = 1e-6;
  double required_fraction = 0.5;
};

struct CurvePoint {
  int m = 0;
  double success_rate = 0.0;
  double error_median = 0.0;
};

struct MinMeasurementsResult {
  std::optional<int> m;
  std::vector<CurvePoint> curve;
};

/// Linear scan over [m_min, m_max] from the bottom; the first M whose success
/// fraction meets the criterion is returned. With `full_curve` the scan keeps
/// going to m_max so the whole curve is reported.
MinMeasurementsResult find_min_measurements(const SignalSpec& spec, Algorithm algorithm,
                                            const AlgorithmConfigs& configs,
                                            const SuccessCriterion& criterion,
                                            const std::vector<std::uint64_t>& seeds,
                                            int m_min, int m_max, bool full_curve = false,
                                            int jobs = 1);

}  // namespace sparsecs
