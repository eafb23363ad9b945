#pragma once

#include <complex>

#include <Eigen/Core>

namespace gkern {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest entry modulus; 0 for an empty matrix.
inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermitian_defect(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

/// Entries are finite (no NaN/Inf).
inline bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace gkern
