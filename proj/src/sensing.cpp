#include "sparsecs/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "sparsecs/errors.hpp"

namespace sparsecs {
namespace {

void check_positions(std::span<const int> positions, int length_n) {
  if (length_n <= 0) throw Error(ErrorKind::invalid_argument, "signal length must be positive");
  if (positions.empty()) throw Error(ErrorKind::invalid_argument, "at least one position required");
  if (static_cast<int>(positions.size()) > length_n) {
    throw Error(ErrorKind::invalid_argument, "more positions than signal samples");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= length_n) {
      throw Error(ErrorKind::invalid_argument,
                  "position " + std::to_string(positions[i]) + " out of range");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw Error(ErrorKind::invalid_argument, "positions must be strictly increasing");
    }
  }
}

// mt19937_64's output sequence is fixed by the standard; the distribution
// classes are not, so the reduction to [0, bound) is done here.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace

MeasurementSet::MeasurementSet(int length_n, std::vector<int> positions, ComplexVector values)
    : length_n_(length_n), positions_(std::move(positions)), values_(std::move(values)) {
  check_positions(positions_, length_n_);
  if (values_.size() != static_cast<Eigen::Index>(positions_.size())) {
    throw Error(ErrorKind::dimension_mismatch, "positions and values differ in length");
  }
}

SensingOperator::SensingOperator(int length_n, std::vector<int> positions, ColumnScaling scaling)
    : length_n_(length_n), positions_(std::move(positions)), scaling_(scaling) {
  check_positions(positions_, length_n_);
  const UnitRoots roots(length_n_);
  const int na = rows();
  entries_.resize(na, length_n_);
  // index[a] tracks k·positions[a] mod N as k advances
  std::vector<int> index(static_cast<std::size_t>(na), 0);
  for (int k = 0; k < length_n_; ++k) {
    for (int a = 0; a < na; ++a) {
      auto& m = index[static_cast<std::size_t>(a)];
      entries_(a, k) = roots.positive(m, 1);
      m += positions_[static_cast<std::size_t>(a)];
      if (m >= length_n_) m -= length_n_;
    }
  }
  if (scaling_ == ColumnScaling::unit_norm) entries_ *= amplitude_factor();
}

double SensingOperator::amplitude_factor() const noexcept {
  return scaling_ == ColumnScaling::unit_norm ? 1.0 / std::sqrt(static_cast<double>(rows())) : 1.0;
}

ComplexVector SensingOperator::apply(const ComplexVector& x) const {
  if (x.size() != length_n_) {
    throw Error(ErrorKind::dimension_mismatch, "apply: expected a length-N vector");
  }
  return entries_ * x;
}

ComplexVector SensingOperator::adjoint_apply(const ComplexVector& y) const {
  if (y.size() != rows()) {
    throw Error(ErrorKind::dimension_mismatch, "adjoint_apply: expected a length-Na vector");
  }
  return entries_.adjoint() * y;
}

ComplexMatrix SensingOperator::restrict_columns(std::span<const int> support) const {
  std::vector<bool> used(static_cast<std::size_t>(length_n_), false);
  ComplexMatrix out(rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) {
    const int k = support[j];
    if (k < 0 || k >= length_n_) {
      throw Error(ErrorKind::invalid_argument, "column " + std::to_string(k) + " out of range");
    }
    if (used[static_cast<std::size_t>(k)]) {
      throw Error(ErrorKind::invalid_argument, "duplicate column " + std::to_string(k));
    }
    used[static_cast<std::size_t>(k)] = true;
    out.col(static_cast<Eigen::Index>(j)) = entries_.col(k);
  }
  return out;
}

std::vector<int> draw_positions(int length_n, int m_samples, std::uint64_t seed) {
  if (length_n <= 0 || m_samples < 1 || m_samples > length_n) {
    throw Error(ErrorKind::invalid_argument,
                "sample count " + std::to_string(m_samples) + " outside [1, " +
                    std::to_string(length_n) + "]");
  }
  std::vector<int> pool(static_cast<std::size_t>(length_n));
  std::iota(pool.begin(), pool.end(), 0);
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first m_samples slots end up a uniform subset.
  for (int i = 0; i < m_samples; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   uniform_below(rng, static_cast<std::uint64_t>(length_n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(m_samples));
  std::sort(pool.begin(), pool.end());
  return pool;
}

MeasurementSet sample_uniform(const TimeSignal& signal, int m_samples, std::uint64_t seed) {
  auto positions = draw_positions(signal.length(), m_samples, seed);
  ComplexVector values(m_samples);
  for (int a = 0; a < m_samples; ++a) values[a] = signal.samples[positions[static_cast<std::size_t>(a)]];
  return MeasurementSet(signal.length(), std::move(positions), std::move(values));
}

SensingOperator build_operator(std::span<const int> positions, int length_n, ColumnScaling scaling) {
  return SensingOperator(length_n, std::vector<int>(positions.begin(), positions.end()), scaling);
}

ComplexMatrix partial_fourier_columns(std::span<const int> positions, int length_n,
                                      std::span<const int> support) {
  const UnitRoots roots(length_n);
  ComplexMatrix out(static_cast<Eigen::Index>(positions.size()),
                    static_cast<Eigen::Index>(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j] < 0 || support[j] >= length_n) {
      throw Error(ErrorKind::invalid_argument, "column " + std::to_string(support[j]) + " out of range");
    }
    for (std::size_t a = 0; a < positions.size(); ++a) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j)) =
          roots.positive(support[j], positions[a]);
    }
  }
  return out;
}

void write_measurements_csv(std::ostream& out, const MeasurementSet& ms) {
  out << "position,re,im\n" << std::setprecision(17);
  for (int a = 0; a < ms.count(); ++a) {
    const Complex v = ms.values()[a];
    out << ms.positions()[static_cast<std::size_t>(a)] << ',' << v.real() << ',' << v.imag() << '\n';
  }
}

MeasurementSet read_measurements_csv(std::istream& in, int length_n) {
  std::string line;
  if (!std::getline(in, line) || line != "position,re,im") {
    throw Error(ErrorKind::invalid_argument, "measurement CSV must start with `position,re,im`");
  }
  std::vector<int> positions;
  std::vector<Complex> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    int pos = 0;
    double re = 0.0;
    double im = 0.0;
    char c1 = 0;
    char c2 = 0;
    if (!(row >> pos >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
      throw Error(ErrorKind::invalid_argument,
                  "malformed measurement row at line " + std::to_string(line_no));
    }
    positions.push_back(pos);
    values.emplace_back(re, im);
  }
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return MeasurementSet(length_n, std::move(positions), std::move(v));
}

}  // namespace sparsecs
