// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sparsecs/bench.hpp"
#include "sparsecs/errors.hpp"

using namespace sparsecs;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<std::uint64_t> seeds(std::uint64_t count) {
  std::vector<std::uint64_t> out(count);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const std::vector<int> kGrid{200, 225, 250, 275, 300};

// Serial sweep shared by criteria 1, 6 and 7.
std::vector<ExperimentRecord> grid_sweep() {
  ExperimentConfig cfg;
  cfg.m_values = kGrid;
  cfg.seeds = seeds(100);
  cfg.algorithms = {Algorithm::sira, Algorithm::omp, Algorithm::iht};
  return run_sweep(cfg, 1);
}

std::vector<const ExperimentRecord*> cell(const std::vector<ExperimentRecord>& all, Algorithm a, int m) {
  std::vector<const ExperimentRecord*> out;
  for (const auto& r : all) {
    if (r.algorithm == a && r.m == m) out.push_back(&r);
  }
  return out;
}

void criterion1(const std::vector<ExperimentRecord>& all) {
  bool ok = true;
  std::string detail = "SIRA exact support and error <= 1e-8, rate per M:";
  for (int m : kGrid) {
    int good = 0;
    const auto trials = cell(all, Algorithm::sira, m);
    for (const auto* r : trials) good += (!r->failed && r->support_exact && r->error <= 1e-8) ? 1 : 0;
    const double rate = static_cast<double>(good) / trials.size();
    ok = ok && rate >= 0.95;
    detail += " M=" + std::to_string(m) + ":" + fmt("%.2f", rate);
  }
  verdict(1, ok, detail + " (need >= 0.95)");
}

void criterion2() {
  const SignalSpec spec = benchmark_spec();
  int good = 0;
  for (auto s : seeds(100)) {
    const auto r = run_trial(spec, Algorithm::sira, 170, s, {});
    good += (!r.failed && r.error <= 1e-6) ? 1 : 0;
  }
  const auto minm = find_min_measurements(spec, Algorithm::sira, {}, {1e-6, 0.5}, seeds(100), 100, 512);
  const bool ok = good > 0 && good >= 50 && minm.m && *minm.m <= 200;
  verdict(2, ok,
          "SIRA success at M=170: " + std::to_string(good) + "/100 (need >= 50); min M = " +
              (minm.m ? std::to_string(*minm.m) : std::string("none")) + " (need <= 200)");
}

void criterion3() {
  const SignalSpec spec = benchmark_spec();
  AlgorithmConfigs cfg;  // k = 7, step 1/Na, eps = 1e-4 raw
  std::vector<double> errors;
  int good = 0;
  for (auto s : seeds(100)) {
    const auto r = run_trial(spec, Algorithm::iht, 200, s, cfg);
    errors.push_back(r.error);
    good += (!r.failed && r.error <= 1e-4) ? 1 : 0;
  }
  const double median = quantile(errors, 0.5);
  verdict(3, median <= 1e-4 && good >= 95,
          "IHT M=200 k=7 eps=1e-4: median error " + fmt("%.3e", median) + " (need <= 1e-4), " +
              std::to_string(good) + "/100 within 1e-4 (need >= 95)");
}

void criterion4() {
  const SignalSpec spec = benchmark_spec();
  int at34 = 0;
  std::string curve;
  for (int m = 30; m <= 60; ++m) {
    AlgorithmConfigs cfg;
    cfg.iht.step_mu = 0.5 / m;
    cfg.iht.max_iters = 3000;
    int good = 0;
    for (auto s : seeds(100)) {
      const auto r = run_trial(spec, Algorithm::iht, m, s, cfg);
      good += (!r.failed && r.error <= 1e-3) ? 1 : 0;
    }
    if (m == 34) at34 = good;
    curve += " " + std::to_string(m) + ":" + std::to_string(good);
  }
  std::printf("  IHT success count (error <= 1e-3, of 100) for M = 30..60:%s\n", curve.c_str());
  verdict(4, at34 >= 1,
          "IHT M=34 k=7 step 0.5/Na: " + std::to_string(at34) + "/100 seeds with error <= 1e-3 (need >= 1)");
}

void criterion5() {
  const SignalSpec spec = benchmark_spec();
  AlgorithmConfigs cfg;
  cfg.iht.k_components = 3;
  int above = 0;
  double smallest = 1e300;
  for (auto s : seeds(100)) {
    const auto r = run_trial(spec, Algorithm::iht, 200, s, cfg);
    above += r.error > 0.1 ? 1 : 0;
    smallest = std::min(smallest, r.error);
  }
  verdict(5, above == 100,
          "IHT k=3 on K=7 at M=200: " + std::to_string(above) + "/100 with error > 0.1, smallest " +
              fmt("%.3f", smallest));
}

void criterion6(const std::vector<ExperimentRecord>& all) {
  bool ok = true;
  std::string detail = "OMP support_exact rate per M:";
  int exact_but_inaccurate = 0;
  for (int m : kGrid) {
    int exact = 0;
    const auto trials = cell(all, Algorithm::omp, m);
    for (const auto* r : trials) {
      if (r->failed || !r->support_exact) continue;
      ++exact;
      if (r->error > 1e-8) ++exact_but_inaccurate;
    }
    const double rate = static_cast<double>(exact) / trials.size();
    ok = ok && rate >= 0.95;
    detail += " M=" + std::to_string(m) + ":" + fmt("%.2f", rate);
  }
  verdict(6, ok && exact_but_inaccurate == 0,
          detail + " (need >= 0.95); exact-support trials with error > 1e-8: " +
              std::to_string(exact_but_inaccurate));
}

void criterion7(const std::vector<ExperimentRecord>& all) {
  bool ok = true;
  std::string detail = "median seconds sira/iht/omp:";
  for (int m : kGrid) {
    const auto median = [&](Algorithm a) {
      std::vector<double> t;
      for (const auto* r : cell(all, a, m)) t.push_back(r->elapsed_seconds);
      return quantile(t, 0.5);
    };
    const double s = median(Algorithm::sira);
    const double i = median(Algorithm::iht);
    const double o = median(Algorithm::omp);
    ok = ok && s < i && i < o;
    detail += " M=" + std::to_string(m) + ":" + fmt("%.2e", s) + "/" + fmt("%.2e", i) + "/" + fmt("%.2e", o);
  }
  verdict(7, ok, detail + " (need sira < iht < omp)");
}

SignalSpec random_spec(std::mt19937_64& rng, int n, int k, double min_magnitude) {
  std::uniform_real_distribution<double> mag(min_magnitude, 4.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Component> comps;
  for (int bin : oracle::random_subset(rng, n, k)) comps.push_back({bin, std::polar(mag(rng), phase(rng))});
  return SignalSpec(n, std::move(comps));
}

void criterion8() {
  std::map<std::string, bool> ok;
  std::mt19937_64 rng(8);

  ok["parseval+roundtrip"] = true;
  for (int n : {1, 7, 64, 512, 1024}) {
    const ComplexVector x = oracle::random_complex(rng, n);
    const Spectrum s = dft(TimeSignal{x});
    const double e = x.squaredNorm();
    ok["parseval+roundtrip"] = ok["parseval+roundtrip"] &&
                               std::abs(e - s.bins.squaredNorm() / n) <= 1e-9 * e &&
                               oracle::max_abs_diff(idft(s).samples, x) <= 1e-9;
  }

  ok["adjoint"] = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 8 + 7 * trial;
    const int m = 1 + trial % n;
    const SensingOperator op = build_operator(oracle::random_subset(rng, n, m), n);
    const ComplexVector x = oracle::random_complex(rng, n);
    const ComplexVector y = oracle::random_complex(rng, m);
    const Complex lhs = op.apply(x).dot(y);
    ok["adjoint"] = ok["adjoint"] && std::abs(lhs - x.dot(op.adjoint_apply(y))) <= 1e-10 * (1.0 + std::abs(lhs));
  }

  ok["omp-monotone"] = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 16 + trial % 17;
    const int k = 1 + trial % 5;
    const SignalSpec spec = random_spec(rng, n, k, 0.1);
    const MeasurementSet ms =
        sample_uniform(generate_signal(spec), std::max(k + 1, n / 2), static_cast<std::uint64_t>(trial));
    const SensingOperator op = build_operator(ms.positions(), n);
    double previous = ms.values().norm();
    for (int budget = 1; budget <= k + 1; ++budget) {
      const RecoveryResult r = omp_recover(ms, op, {.k_components = budget});
      const bool distinct = std::set<int>(r.support.begin(), r.support.end()).size() == r.support.size();
      ok["omp-monotone"] = ok["omp-monotone"] && distinct &&
                           r.residual_norm <= previous * (1.0 + 1e-12) + 1e-12;
      previous = r.residual_norm;
    }
  }

  ok["hard-threshold"] = true;
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexVector x = oracle::random_complex(rng, 40);
    const int k = 1 + trial % 40;
    const ComplexVector h = hard_threshold(x, k);
    ok["hard-threshold"] = ok["hard-threshold"] && hard_threshold(h, k) == h && h == oracle::sort_top_k(x, k);
  }

  ok["detect-antitone"] = true;
  {
    const Spectrum v{oracle::random_complex(rng, 256, 3.0), SpectrumScale::raw};
    std::vector<int> previous = detect_support(v, 0.0);
    for (double t = 0.5; t < 20.0; t += 0.5) {
      const auto current = detect_support(v, t);
      ok["detect-antitone"] = ok["detect-antitone"] &&
                              std::includes(previous.begin(), previous.end(), current.begin(), current.end());
      previous = current;
    }
  }

  const SignalSpec bench = benchmark_spec();
  const TimeSignal signal = generate_signal(bench);
  ok["sira=oracle_solve"] = true;
  int compared = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MeasurementSet ms = sample_uniform(signal, 230, s);
    const RecoveryResult r = sira_recover(ms, {});
    if (r.support != bench.support()) continue;
    ++compared;
    const ComplexVector ref = oracle_solve(ms, bench.support());
    for (std::size_t j = 0; j < r.support.size(); ++j) {
      ok["sira=oracle_solve"] = ok["sira=oracle_solve"] &&
                                r.spectrum[r.support[j]] == ref[static_cast<Eigen::Index>(j)];
    }
  }
  ok["sira=oracle_solve"] = ok["sira=oracle_solve"] && compared > 0;

  {
    std::set<int> on;
    for (int b : bench.support()) on.insert(b);
    double power = 0.0;
    long count = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const Spectrum v = initial_dft(sample_uniform(signal, 200, s));
      for (int k = 0; k < 512; ++k) {
        if (on.count(k)) continue;
        power += std::norm(v.bins[k]);
        ++count;
      }
    }
    const double model = sira_variance(512, 200, bench.energy());
    ok["variance-model"] = std::abs(power / count - model) <= 0.10 * model;
  }

  ok["full-sampling"] = true;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 16 + trial % 49;
    const int k = 1 + trial % 16;
    const SignalSpec spec = random_spec(rng, n, k, 0.5);
    const MeasurementSet ms = sample_uniform(generate_signal(spec), n, static_cast<std::uint64_t>(trial));
    const SensingOperator op = build_operator(ms.positions(), n);
    const auto good = [&](const RecoveryResult& r) {
      return r.support == spec.support() && oracle::max_abs_diff(r.spectrum, spec.amplitudes()) <= 1e-10;
    };
    ok["full-sampling"] = ok["full-sampling"] && good(sira_recover(ms, {})) &&
                          good(omp_recover(ms, op, {.k_components = k})) &&
                          good(iht_recover(ms, op, {.k_components = k, .max_iters = 100, .eps = 1e-9,
                                                    .step_mu = std::nullopt}));
  }

  bool all = true;
  std::string detail = "property suite:";
  for (const auto& [name, pass] : ok) {
    all = all && pass;
    detail += " " + name + "=" + (pass ? "ok" : "FAILED");
  }
  verdict(8, all, detail);
}

}  // namespace

int main() {
  try {
    const auto grid = grid_sweep();
    criterion1(grid);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(grid);
    criterion7(grid);
    criterion8();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
