#pragma once

#include <Eigen/Dense>
#include <complex>

namespace arcsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;

/// Max-norm of the anti-Hermitian part of a square matrix.
inline double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// C <- (C + C^dagger)/2, suppressing roundoff drift.
inline void hermitize(Matrix& a) {
  a = 0.5 * (a + a.adjoint()).eval();
}

}  // namespace arcsim
