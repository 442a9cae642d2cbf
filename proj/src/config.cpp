#include "sparsecs/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string_view>

#include "sparsecs/errors.hpp"

namespace sparsecs {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, int line, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(line, "`" + std::string(key) + "`: cannot parse `" + std::string(text) + "`");
  }
  return value;
}

template <typename T>
std::vector<T> parse_int_list(std::string_view text, int line, std::string_view key) {
  std::vector<T> out;
  for (auto item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number<T>(item, line, key));
      continue;
    }
    auto hi_text = item.substr(dots + 2);
    T step = 1;
    if (const auto colon = hi_text.find(':'); colon != std::string_view::npos) {
      step = parse_number<T>(hi_text.substr(colon + 1), line, key);
      hi_text = hi_text.substr(0, colon);
    }
    const T lo = parse_number<T>(item.substr(0, dots), line, key);
    const T hi = parse_number<T>(hi_text, line, key);
    if (step <= 0 || hi < lo) {
      throw ConfigError(line, "`" + std::string(key) + "`: bad range `" + std::string(item) + "`");
    }
    for (T v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

struct PendingComponent {
  Component component;
  int line;
};

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::optional<int> length_n;
  std::vector<PendingComponent> components;
  int m_values_line = 0;
  bool have_seeds = false;
  bool have_algorithms = false;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "expected key=value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    auto& ex = cfg.experiment;
    auto& c = ex.configs;

    if (key == "n") {
      length_n = parse_number<int>(value, line, key);
      if (*length_n <= 0) throw ConfigError(line, "`n` must be positive");
    } else if (key == "component") {
      const auto parts = split(value, ',');
      if (parts.size() != 3) throw ConfigError(line, "`component` expects <bin>,<re>,<im>");
      components.push_back({{parse_number<int>(parts[0], line, key),
                             Complex(parse_number<double>(parts[1], line, key),
                                     parse_number<double>(parts[2], line, key))},
                            line});
    } else if (key == "m_values") {
      ex.m_values = parse_int_list<int>(value, line, key);
      m_values_line = line;
    } else if (key == "seeds") {
      ex.seeds = parse_int_list<std::uint64_t>(value, line, key);
      have_seeds = true;
    } else if (key == "algorithms") {
      ex.algorithms.clear();
      for (auto name : split(value, ',')) {
        const auto alg = parse_algorithm(name);
        if (!alg) throw ConfigError(line, "unknown algorithm `" + std::string(name) + "`");
        ex.algorithms.push_back(*alg);
      }
      have_algorithms = true;
    } else if (key == "omp.k") {
      c.omp.k_components = parse_number<int>(value, line, key);
    } else if (key == "omp.residual_tol") {
      c.omp.residual_tol = parse_number<double>(value, line, key);
    } else if (key == "iht.k") {
      c.iht.k_components = parse_number<int>(value, line, key);
    } else if (key == "iht.max_iters") {
      c.iht.max_iters = parse_number<int>(value, line, key);
    } else if (key == "iht.eps") {
      c.iht.eps = parse_number<double>(value, line, key);
    } else if (key == "iht.mu") {
      c.iht.step_mu = parse_number<double>(value, line, key);
    } else if (key == "sira.p") {
      c.sira.p_detect = parse_number<double>(value, line, key);
      if (!(c.sira.p_detect > 0.0 && c.sira.p_detect < 1.0)) {
        throw ConfigError(line, "`sira.p` must lie strictly inside (0, 1)");
      }
    } else if (key == "sira.threshold_form") {
      if (value == "literature") {
        c.sira.threshold_form = ThresholdForm::literature;
      } else if (value == "literal_eq13") {
        c.sira.threshold_form = ThresholdForm::literal_eq13;
      } else {
        throw ConfigError(line, "`sira.threshold_form` is literature or literal_eq13");
      }
    } else if (key == "sira.energy_mode") {
      if (value == "estimate_from_samples") {
        c.sira.energy_mode = EnergyMode::estimate_from_samples;
      } else if (value == "known_amplitudes") {
        c.sira.energy_mode = EnergyMode::known_amplitudes;
      } else {
        throw ConfigError(line, "`sira.energy_mode` is estimate_from_samples or known_amplitudes");
      }
    } else if (key == "sira.known_energy") {
      c.sira.known_energy = parse_number<double>(value, line, key);
    } else if (key == "success_tolerance") {
      cfg.success_tolerance = parse_number<double>(value, line, key);
    } else if (key == "minm.m_min") {
      cfg.minm_min = parse_number<int>(value, line, key);
    } else if (key == "minm.m_max") {
      cfg.minm_max = parse_number<int>(value, line, key);
    } else if (key == "minm.fraction") {
      cfg.minm_fraction = parse_number<double>(value, line, key);
    } else {
      throw ConfigError(line, "unknown key `" + std::string(key) + "`");
    }
  }

  if (!length_n) throw ConfigError(0, "missing required key `n`");
  std::set<int> bins;
  std::vector<Component> spec_components;
  for (const auto& pc : components) {
    if (pc.component.bin < 0 || pc.component.bin >= *length_n) {
      throw ConfigError(pc.line, "component bin outside [0, n)");
    }
    if (!bins.insert(pc.component.bin).second) throw ConfigError(pc.line, "duplicate component bin");
    spec_components.push_back(pc.component);
  }
  cfg.experiment.spec = SignalSpec(*length_n, std::move(spec_components));

  if (m_values_line == 0) cfg.experiment.m_values = {std::min(200, *length_n)};
  if (!have_seeds) cfg.experiment.seeds = {0};
  if (!have_algorithms) cfg.experiment.algorithms = {Algorithm::sira, Algorithm::omp, Algorithm::iht};
  for (int m : cfg.experiment.m_values) {
    if (m < 1 || m > *length_n) throw ConfigError(m_values_line, "m_values entry outside [1, n]");
  }
  if (cfg.minm_max == 0) cfg.minm_max = *length_n;
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config " + path.string());
  return parse_config(in);
}

std::string format_spec(const SignalSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  out << "n=" << spec.length() << '\n';
  for (const auto& c : spec.components()) {
    out << "component=" << c.bin << ',' << c.amplitude.real() << ',' << c.amplitude.imag() << '\n';
  }
  return out.str();
}

}  // namespace sparsecs
