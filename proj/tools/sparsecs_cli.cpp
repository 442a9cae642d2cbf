// sparsecs: signal generation, single recoveries, sweeps and minimal-M searches
// for the OMP / IHT / SIRA comparison. All output is plot-ready CSV.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sparsecs/bench.hpp"
#include "sparsecs/config.hpp"
#include "sparsecs/errors.hpp"
#include "sparsecs/report.hpp"

namespace fs = std::filesystem;
using namespace sparsecs;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kRecoveryFailure = 3,
  kIoFailure = 4,
};

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::optional<int> m;
  std::optional<int> m_min;
  std::optional<int> m_max;
  bool full_curve = false;
};

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
  body(out);
  out.flush();
  if (!out) throw Error(ErrorKind::io, "write to " + path.string() + " failed");
}

fs::path prepare_out_dir(const Options& opt) {
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create output directory " + opt.out_dir);
  return opt.out_dir;
}

Algorithm require_algorithm(const std::string& name) {
  const auto alg = parse_algorithm(name);
  if (!alg) throw ConfigError(0, "unknown algorithm `" + name + "` (sira, omp, iht)");
  return *alg;
}

int cmd_generate(const Options& opt) {
  const RunConfig cfg = load_config(opt.config_path);
  const fs::path out = prepare_out_dir(opt);
  const TimeSignal signal = generate_signal(cfg.experiment.spec);
  write_file(out / "signal_time.csv", [&](std::ostream& os) { report::write_signal_time(os, signal); });
  const Spectrum spectrum = dft(signal);
  write_file(out / "signal_dft.csv", [&](std::ostream& os) { report::write_signal_dft(os, spectrum); });
  return kOk;
}

int cmd_recover(const Options& opt) {
  const RunConfig cfg = load_config(opt.config_path);
  const Algorithm alg = require_algorithm(opt.algorithm);
  const auto& ex = cfg.experiment;
  const int m = opt.m.value_or(ex.m_values.front());
  const std::uint64_t seed = opt.seed.value_or(ex.seeds.front());
  if (m < 1 || m > ex.spec.length()) throw ConfigError(0, "--m outside [1, n]");
  const fs::path out = prepare_out_dir(opt);

  const TrialOutcome trial = run_trial_with_result(ex.spec, alg, m, seed, ex.configs);
  if (trial.record.failed) {
    std::cout << "error," << to_string(alg) << ',' << m << ',' << seed << ','
              << trial.record.failure << '\n';
    return kRecoveryFailure;
  }
  const fs::path file = out / ("recon_" + std::string(to_string(alg)) + "_M" + std::to_string(m) +
                               "_s" + std::to_string(seed) + ".csv");
  write_file(file, [&](std::ostream& os) { report::write_recon(os, ex.spec, trial.result->spectrum); });
  std::cout << report::trial_line(trial.record) << '\n';
  return kOk;
}

int cmd_sweep(const Options& opt) {
  const RunConfig cfg = load_config(opt.config_path);
  const fs::path out = prepare_out_dir(opt);
  const auto records = run_sweep(cfg.experiment, opt.jobs);
  write_file(out / "sweep.csv", [&](std::ostream& os) { report::write_sweep(os, records); });
  const auto summary = summarize(records, cfg.success_tolerance);
  write_file(out / "sweep_summary.csv", [&](std::ostream& os) { report::write_summary(os, summary); });
  int failures = 0;
  for (const auto& r : records) failures += r.failed ? 1 : 0;
  std::cout << "sweep," << records.size() << " trials," << summary.size() << " cells," << failures
            << " failed\n";
  return kOk;
}

int cmd_minm(const Options& opt) {
  const RunConfig cfg = load_config(opt.config_path);
  const Algorithm alg = require_algorithm(opt.algorithm);
  const int lo = opt.m_min.value_or(cfg.minm_min);
  const int hi = opt.m_max.value_or(cfg.minm_max);
  if (lo < 1 || hi > cfg.experiment.spec.length() || lo > hi) {
    throw ConfigError(0, "minimal-M range must satisfy 1 <= m_min <= m_max <= n");
  }
  const fs::path out = prepare_out_dir(opt);
  const SuccessCriterion criterion{cfg.success_tolerance, cfg.minm_fraction};
  const auto result = find_min_measurements(cfg.experiment.spec, alg, cfg.experiment.configs,
                                            criterion, cfg.experiment.seeds, lo, hi,
                                            opt.full_curve, opt.jobs);
  write_file(out / ("minm_" + std::string(to_string(alg)) + ".csv"),
             [&](std::ostream& os) { report::write_minm(os, result.curve); });
  std::cout << "minm," << to_string(alg) << ','
            << (result.m ? std::to_string(*result.m) : std::string("none")) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse recovery benchmark: OMP, IHT and SIRA on frequency-sparse signals"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "run config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--jobs", opt.jobs, "parallel trials (1 keeps timings clean)")->check(CLI::PositiveNumber);
  };

  auto* generate = app.add_subcommand("generate", "write signal_time.csv and signal_dft.csv");
  add_common(generate);

  auto* recover_cmd = app.add_subcommand("recover", "run one trial and write its reconstruction");
  add_common(recover_cmd);
  recover_cmd->add_option("--algorithm", opt.algorithm, "sira | omp | iht")->required();
  recover_cmd->add_option("--m", opt.m, "available samples (default: first m_values entry)");
  recover_cmd->add_option("--seed", opt.seed, "sampling seed (default: first seeds entry)");

  auto* sweep = app.add_subcommand("sweep", "algorithms x m_values x seeds");
  add_common(sweep);

  auto* minm = app.add_subcommand("minm", "smallest M meeting the success criterion");
  add_common(minm);
  minm->add_option("--algorithm", opt.algorithm, "sira | omp | iht")->required();
  minm->add_option("--m-min", opt.m_min, "lower end of the scan");
  minm->add_option("--m-max", opt.m_max, "upper end of the scan");
  minm->add_flag("--full-curve", opt.full_curve, "keep scanning after the first success");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(opt);
    if (*recover_cmd) return cmd_recover(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*minm) return cmd_minm(opt);
  } catch (const Error& e) {
    std::cerr << "sparsecs: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::config:
      case ErrorKind::invalid_spec:
      case ErrorKind::invalid_argument:
        std::cout << "error,config," << e.what() << '\n';
        return kConfigError;
      case ErrorKind::io:
        std::cout << "error,io," << e.what() << '\n';
        return kIoFailure;
      default:
        std::cout << "error,recovery," << to_string(e.kind()) << '\n';
        return kRecoveryFailure;
    }
  }
  return kUsage;
}
