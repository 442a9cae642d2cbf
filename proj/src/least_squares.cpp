#include <string>

#include "sparsecs/errors.hpp"
#include "sparsecs/recovery.hpp"

namespace sparsecs {

LeastSquaresSolution solve_amplitudes(const ComplexMatrix& a_cs, const ComplexVector& v) {
  if (a_cs.rows() != v.size()) {
    throw Error(ErrorKind::dimension_mismatch, "least squares: row count differs from data length");
  }
  if (a_cs.cols() == 0) return {ComplexVector(0), v.norm()};
  if (a_cs.cols() > a_cs.rows()) {
    throw Error(ErrorKind::underdetermined,
                std::to_string(a_cs.cols()) + " unknowns from " + std::to_string(a_cs.rows()) +
                    " samples");
  }
  const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(a_cs);
  if (qr.rank() < a_cs.cols()) {
    throw SingularSystemError("least squares: restricted system has rank " +
                                  std::to_string(qr.rank()) + " < " + std::to_string(a_cs.cols()),
                              {});
  }
  LeastSquaresSolution out;
  out.coefficients = qr.solve(v);
  out.residual_norm = (v - a_cs * out.coefficients).norm();
  return out;
}

ComplexVector oracle_solve(const MeasurementSet& ms, std::span<const int> true_support) {
  const ComplexMatrix a = partial_fourier_columns(ms.positions(), ms.length(), true_support);
  return solve_amplitudes(a, ms.values()).coefficients;
}

}  // namespace sparsecs
