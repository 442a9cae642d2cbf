#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sparsecs/bench.hpp"

namespace sparsecs {

/// Everything a run-config file can set. The format is line oriented:
///
///     # comment
///     n=512
///     component=32,3.5,0
///     m_values=200,225,250..300:25
///     seeds=0..99
///     algorithms=sira,omp,iht
///     iht.k=7   # trailing comment
///
/// Integer lists accept comma-separated items, each either a value or an
/// inclusive range `lo..hi` with an optional `:step`.
struct RunConfig {
  ExperimentConfig experiment;
  double success_tolerance = 1e-6;
  int minm_min = 1;
  int minm_max = 0;  // 0 means N
  double minm_fraction = 0.5;
};

/// Throws ConfigError carrying the 1-based line number of the first problem.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// `n=` line followed by one `component=` line per component.
std::string format_spec(const SignalSpec& spec);

}  // namespace sparsecs
