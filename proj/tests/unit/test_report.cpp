#include <catch_amalgamated.hpp>

#include <sstream>

#include "sparsecs/report.hpp"

using namespace sparsecs;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string drop_column(const std::string& csv, std::size_t column) {
  std::string out;
  for (const auto& line : lines(csv)) {
    std::size_t field = 0;
    std::string kept;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
      if (field++ != column) kept += cell + ',';
    }
    out += kept + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("report: number formats", "[report]") {
  CHECK(report::format_error(1.5e-7) == "1.500000000e-07");
  CHECK(report::format_error(0.0) == "0.000000000e+00");
  CHECK(report::format_seconds(0.0012345678901) == "0.001234568");
  CHECK(report::format_real(0.1) == "0.1");
  CHECK(report::format_real(-3.0) == "-3");
  CHECK(std::stod(report::format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("report: signal files", "[report]") {
  const SignalSpec spec(4, {{1, 2.0}});
  const TimeSignal x = generate_signal(spec);
  std::ostringstream time_csv;
  report::write_signal_time(time_csv, x);
  const auto t = lines(time_csv.str());
  REQUIRE(t.size() == 5);
  CHECK(t[0] == "n,re,im");
  CHECK(t[1] == "0,2,0");

  std::ostringstream dft_csv;
  report::write_signal_dft(dft_csv, dft(x));
  const auto d = lines(dft_csv.str());
  REQUIRE(d.size() == 5);
  CHECK(d[0] == "bin,magnitude");
  CHECK(d[2].rfind("1,8", 0) == 0);

  std::ostringstream recon;
  ComplexVector rec = ComplexVector::Zero(4);
  rec[1] = Complex(0.0, 1.5);
  report::write_recon(recon, spec, rec);
  const auto r = lines(recon.str());
  REQUIRE(r.size() == 5);
  CHECK(r[0] == "bin,true_magnitude,recovered_magnitude");
  CHECK(r[1] == "0,0,0");
  CHECK(r[2] == "1,2,1.5");
}

TEST_CASE("report: sweep and summary rows", "[report]") {
  ExperimentRecord rec;
  rec.algorithm = Algorithm::omp;
  rec.m = 200;
  rec.seed = 4;
  rec.n = 512;
  rec.k = 7;
  rec.error = 2.5e-15;
  rec.elapsed_seconds = 0.00125;
  rec.support_exact = true;
  rec.iterations = 7;
  std::ostringstream sweep;
  report::write_sweep(sweep, {rec});
  const auto s = lines(sweep.str());
  REQUIRE(s.size() == 2);
  CHECK(s[0] == report::kSweepHeader);
  CHECK(s[1] == "omp,200,4,512,7,2.500000000e-15,0.001250000,true,7,false");

  std::ostringstream summary;
  report::write_summary(summary, summarize({rec}));
  const auto m = lines(summary.str());
  REQUIRE(m.size() == 2);
  CHECK(m[0] == report::kSummaryHeader);
  CHECK(m[1] == "omp,200,2.500000000e-15,2.500000000e-15,2.500000000e-15,0.001250000,1");

  CHECK(report::trial_line(rec) == "omp,200,4,2.500000000e-15,0.001250000,true");

  std::ostringstream minm;
  report::write_minm(minm, {{34, 0.57, 1e-6}});
  CHECK(minm.str() == "m,success_rate,error_median\n34,0.57,1.000000000e-06\n");
}

TEST_CASE("report: reruns are byte-identical outside the timing column", "[report]") {
  ExperimentConfig cfg;
  cfg.m_values = {200, 260};
  cfg.seeds = {0, 1, 2};
  cfg.algorithms = {Algorithm::sira, Algorithm::omp, Algorithm::iht};
  std::ostringstream a;
  std::ostringstream b;
  report::write_sweep(a, run_sweep(cfg));
  report::write_sweep(b, run_sweep(cfg, 3));
  constexpr std::size_t kTimeColumn = 6;
  CHECK(drop_column(a.str(), kTimeColumn) == drop_column(b.str(), kTimeColumn));
}
