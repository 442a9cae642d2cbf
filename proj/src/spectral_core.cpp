#include "sparsecs/spectral_core.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "sparsecs/errors.hpp"

namespace sparsecs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_spec: return "invalid_spec";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::scale_mismatch: return "scale_mismatch";
    case ErrorKind::singular_system: return "singular_system";
    case ErrorKind::underdetermined: return "underdetermined";
    case ErrorKind::empty_support: return "empty_support";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

SignalSpec::SignalSpec(int length_n, std::vector<Component> components)
    : length_n_(length_n), components_(std::move(components)) {
  if (length_n_ <= 0) {
    throw Error(ErrorKind::invalid_spec, "signal length must be positive");
  }
  std::vector<bool> seen(static_cast<std::size_t>(length_n_), false);
  for (const auto& c : components_) {
    if (c.bin < 0 || c.bin >= length_n_) {
      throw Error(ErrorKind::invalid_spec,
                  "bin " + std::to_string(c.bin) + " outside [0, " + std::to_string(length_n_) + ")");
    }
    if (seen[static_cast<std::size_t>(c.bin)]) {
      throw Error(ErrorKind::invalid_spec, "duplicate bin " + std::to_string(c.bin));
    }
    seen[static_cast<std::size_t>(c.bin)] = true;
  }
}

std::vector<int> SignalSpec::support() const {
  std::vector<int> bins;
  bins.reserve(components_.size());
  for (const auto& c : components_) bins.push_back(c.bin);
  std::sort(bins.begin(), bins.end());
  return bins;
}

ComplexVector SignalSpec::amplitudes() const {
  ComplexVector p = ComplexVector::Zero(length_n_);
  for (const auto& c : components_) p[c.bin] = c.amplitude;
  return p;
}

double SignalSpec::energy() const {
  double e = 0.0;
  for (const auto& c : components_) e += std::norm(c.amplitude);
  return e;
}

SignalSpec benchmark_spec() {
  return SignalSpec(512, {{32, 3.5}, {38, 3.0}, {130, 1.75}, {148, 2.5},
                          {272, 3.75}, {415, 2.3}, {435, 3.3}});
}

UnitRoots::UnitRoots(int n) {
  if (n <= 0) throw Error(ErrorKind::invalid_argument, "transform length must be positive");
  roots_.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    roots_[static_cast<std::size_t>(m)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / n);
  }
}

TimeSignal generate_signal(const SignalSpec& spec) {
  const int n = spec.length();
  const UnitRoots roots(n);
  TimeSignal out{ComplexVector::Zero(n)};
  for (const auto& c : spec.components()) {
    for (int t = 0; t < n; ++t) out.samples[t] += c.amplitude * roots.positive(c.bin, t);
  }
  return out;
}

Spectrum dft(const TimeSignal& signal) {
  const int n = signal.length();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "dft of an empty signal");
  const UnitRoots roots(n);
  Spectrum out{ComplexVector::Zero(n), SpectrumScale::raw};
  for (int k = 0; k < n; ++k) {
    Complex acc{};
    for (int t = 0; t < n; ++t) acc += signal.samples[t] * roots.negative(k, t);
    out.bins[k] = acc;
  }
  return out;
}

TimeSignal idft(const Spectrum& spectrum) {
  if (spectrum.scale != SpectrumScale::raw) {
    throw Error(ErrorKind::scale_mismatch, "idft expects a raw-scale spectrum");
  }
  const int n = spectrum.length();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "idft of an empty spectrum");
  const UnitRoots roots(n);
  TimeSignal out{ComplexVector::Zero(n)};
  for (int t = 0; t < n; ++t) {
    Complex acc{};
    for (int k = 0; k < n; ++k) acc += spectrum.bins[k] * roots.positive(k, t);
    out.samples[t] = acc / static_cast<double>(n);
  }
  return out;
}

Spectrum to_amplitude_scale(const Spectrum& spectrum) {
  if (spectrum.scale == SpectrumScale::amplitude) return spectrum;
  return {spectrum.bins / static_cast<double>(spectrum.length()), SpectrumScale::amplitude};
}

}  // namespace sparsecs
