#include "sparsecs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <tuple>

#include "sparsecs/errors.hpp"

namespace sparsecs {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::iht: return "iht";
    case Algorithm::omp: return "omp";
    case Algorithm::sira: return "sira";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::iht, Algorithm::omp, Algorithm::sira}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

double max_spectral_error(const SignalSpec& spec, const ComplexVector& spectrum) {
  if (spectrum.size() != spec.length()) {
    throw Error(ErrorKind::dimension_mismatch, "spectrum length differs from the signal length");
  }
  return (spec.amplitudes() - spectrum).cwiseAbs().maxCoeff();
}

RecoveryResult recover(Algorithm algorithm, const MeasurementSet& ms,
                       const AlgorithmConfigs& configs) {
  switch (algorithm) {
    case Algorithm::sira:
      return sira_recover(ms, configs.sira);
    case Algorithm::omp:
      return omp_recover(ms, build_operator(ms.positions(), ms.length()), configs.omp);
    case Algorithm::iht:
      return iht_recover(ms, build_operator(ms.positions(), ms.length()), configs.iht);
  }
  throw Error(ErrorKind::invalid_argument, "unknown algorithm");
}

TrialOutcome run_trial_with_result(const SignalSpec& spec, Algorithm algorithm, int m,
                                   std::uint64_t seed, const AlgorithmConfigs& configs) {
  AlgorithmConfigs resolved = configs;
  if (resolved.sira.energy_mode == EnergyMode::known_amplitudes && !resolved.sira.known_energy) {
    resolved.sira.known_energy = spec.energy();
  }

  TrialOutcome out;
  ExperimentRecord& rec = out.record;
  rec.algorithm = algorithm;
  rec.m = m;
  rec.seed = seed;
  rec.n = spec.length();
  rec.k = spec.sparsity();

  const TimeSignal signal = generate_signal(spec);
  const MeasurementSet ms = sample_uniform(signal, m, seed);

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  try {
    RecoveryResult result = recover(algorithm, ms, resolved);
    rec.elapsed_seconds = std::chrono::duration<double>(clock::now() - start).count();
    rec.error = max_spectral_error(spec, result.spectrum);
    rec.support_exact = result.support == spec.support();
    rec.iterations = result.iterations;
    out.result = std::move(result);
  } catch (const Error& e) {
    rec.elapsed_seconds = std::chrono::duration<double>(clock::now() - start).count();
    rec.failed = true;
    rec.failure = std::string(to_string(e.kind()));
    rec.error = max_spectral_error(spec, ComplexVector::Zero(spec.length()));
  }
  return out;
}

ExperimentRecord run_trial(const SignalSpec& spec, Algorithm algorithm, int m,
                           std::uint64_t seed, const AlgorithmConfigs& configs) {
  return run_trial_with_result(spec, algorithm, m, seed, configs).record;
}

namespace {

bool record_order(const ExperimentRecord& a, const ExperimentRecord& b) {
  return std::make_tuple(to_string(a.algorithm), a.m, a.seed) <
         std::make_tuple(to_string(b.algorithm), b.m, b.seed);
}

}  // namespace

std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& config, int jobs) {
  const int n = config.spec.length();
  if (config.m_values.empty() || config.seeds.empty() || config.algorithms.empty()) {
    throw Error(ErrorKind::invalid_argument, "sweep needs m_values, seeds and algorithms");
  }
  for (int m : config.m_values) {
    if (m < 1 || m > n) {
      throw Error(ErrorKind::invalid_argument, "m value " + std::to_string(m) + " outside [1, N]");
    }
  }

  struct Cell {
    Algorithm algorithm;
    int m;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (auto alg : config.algorithms) {
    for (int m : config.m_values) {
      for (auto seed : config.seeds) cells.push_back({alg, m, seed});
    }
  }

  std::vector<ExperimentRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      records[i] = run_trial(config.spec, cells[i].algorithm, cells[i].m, cells[i].seed,
                             config.configs);
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(cells.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::sort(records.begin(), records.end(), record_order);
  return records;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorKind::invalid_argument, "quantile of an empty set");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * std::clamp(q, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records,
                                  double success_tolerance) {
  std::map<std::pair<std::string_view, int>, std::vector<const ExperimentRecord*>> groups;
  for (const auto& r : records) groups[{to_string(r.algorithm), r.m}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, group] : groups) {
    std::vector<double> errors;
    std::vector<double> times;
    int successes = 0;
    for (const auto* r : group) {
      errors.push_back(r->error);
      times.push_back(r->elapsed_seconds);
      if (!r->failed && r->error <= success_tolerance) ++successes;
    }
    SummaryRow row;
    row.algorithm = group.front()->algorithm;
    row.m = key.second;
    row.error_median = quantile(errors, 0.5);
    row.error_q1 = quantile(errors, 0.25);
    row.error_q3 = quantile(errors, 0.75);
    row.time_median_s = quantile(times, 0.5);
    row.success_rate = static_cast<double>(successes) / static_cast<double>(group.size());
    rows.push_back(row);
  }
  return rows;
}

MinMeasurementsResult find_min_measurements(const SignalSpec& spec, Algorithm algorithm,
                                            const AlgorithmConfigs& configs,
                                            const SuccessCriterion& criterion,
                                            const std::vector<std::uint64_t>& seeds,
                                            int m_min, int m_max, bool full_curve, int jobs) {
  if (m_min > m_max || m_min < 1 || m_max > spec.length()) {
    throw Error(ErrorKind::invalid_argument, "measurement range is empty or outside [1, N]");
  }
  if (seeds.empty()) throw Error(ErrorKind::invalid_argument, "no seeds given");

  MinMeasurementsResult out;
  ExperimentConfig cell{spec, {}, seeds, {algorithm}, configs};
  for (int m = m_min; m <= m_max; ++m) {
    cell.m_values = {m};
    const auto summary = summarize(run_sweep(cell, jobs), criterion.tolerance).front();
    out.curve.push_back({m, summary.success_rate, summary.error_median});
    if (!out.m && summary.success_rate >= criterion.required_fraction) {
      out.m = m;
      if (!full_curve) break;
    }
  }
  return out;
}

}  // namespace sparsecs
