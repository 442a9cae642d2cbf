#include "sparsecs/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>

namespace sparsecs::report {

std::string format_error(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9e", value);
  return buf.data();
}

std::string format_seconds(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9f", value);
  return buf.data();
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

namespace {
const char* flag(bool b) { return b ? "true" : "false"; }
}  // namespace

void write_signal_time(std::ostream& out, const TimeSignal& signal) {
  out << kSignalTimeHeader << '\n';
  for (int t = 0; t < signal.length(); ++t) {
    out << t << ',' << format_real(signal.samples[t].real()) << ','
        << format_real(signal.samples[t].imag()) << '\n';
  }
}

void write_signal_dft(std::ostream& out, const Spectrum& spectrum) {
  out << kSignalDftHeader << '\n';
  for (int k = 0; k < spectrum.length(); ++k) {
    out << k << ',' << format_real(std::abs(spectrum.bins[k])) << '\n';
  }
}

void write_recon(std::ostream& out, const SignalSpec& spec, const ComplexVector& recovered) {
  const ComplexVector truth = spec.amplitudes();
  out << kReconHeader << '\n';
  for (int k = 0; k < spec.length(); ++k) {
    out << k << ',' << format_real(std::abs(truth[k])) << ',' << format_real(std::abs(recovered[k]))
        << '\n';
  }
}

void write_sweep(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kSweepHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.m << ',' << r.seed << ',' << r.n << ',' << r.k << ','
        << format_error(r.error) << ',' << format_seconds(r.elapsed_seconds) << ','
        << flag(r.support_exact) << ',' << r.iterations << ',' << flag(r.failed) << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.algorithm) << ',' << r.m << ',' << format_error(r.error_median) << ','
        << format_error(r.error_q1) << ',' << format_error(r.error_q3) << ','
        << format_seconds(r.time_median_s) << ',' << format_real(r.success_rate) << '\n';
  }
}

void write_minm(std::ostream& out, const std::vector<CurvePoint>& curve) {
  out << kMinmHeader << '\n';
  for (const auto& p : curve) {
    out << p.m << ',' << format_real(p.success_rate) << ',' << format_error(p.error_median) << '\n';
  }
}

std::string trial_line(const ExperimentRecord& r) {
  return std::string(to_string(r.algorithm)) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.seed) + ',' + format_error(r.error) + ',' +
         format_seconds(r.elapsed_seconds) + ',' + flag(r.support_exact);
}

}  // namespace sparsecs::report
