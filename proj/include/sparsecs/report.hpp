#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecs/bench.hpp"

namespace sparsecs::report {

inline constexpr std::string_view kSweepHeader =
    "algorithm,m,seed,n,k,error,time_s,support_exact,iterations,failed";
inline constexpr std::string_view kSummaryHeader =
    "algorithm,m,error_median,error_q1,error_q3,time_median_s,success_rate";
inline constexpr std::string_view kSignalTimeHeader = "n,re,im";
inline constexpr std::string_view kSignalDftHeader = "bin,magnitude";
inline constexpr std::string_view kReconHeader = "bin,true_magnitude,recovered_magnitude";
inline constexpr std::string_view kMinmHeader = "m,success_rate,error_median";

/// Scientific notation with 10 significant digits.
std::string format_error(double value);
/// Fixed-point decimal, nanosecond resolution.
std::string format_seconds(double value);
/// Shortest round-trip decimal.
std::string format_real(double value);

void write_signal_time(std::ostream& out, const TimeSignal& signal);
void write_signal_dft(std::ostream& out, const Spectrum& spectrum);
void write_recon(std::ostream& out, const SignalSpec& spec, const ComplexVector& recovered);
void write_sweep(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_minm(std::ostream& out, const std::vector<CurvePoint>& curve);

/// `alg,m,seed,error,time_s,support_exact`
std::string trial_line(const ExperimentRecord& record);

}  // namespace sparsecs::report
