#pragma once

#include "arcsim/types.hpp"

namespace arcsim::linalg {

/// Eigendecomposition of a general complex matrix (values + right eigenvectors).
struct GeneralEig {
  Vector values;
  Matrix vectors;
};

GeneralEig eig_general(const Matrix& a);

/// Eigenvalues only.
Vector eigvals_general(const Matrix& a);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEig {
  RealVector values;
  Matrix vectors;
};

HermitianEig eig_hermitian(const Matrix& a);

RealVector eigvals_hermitian(const Matrix& a);

/// LU factorization wrapper used to apply V^-1 repeatedly and to estimate cond(V).
class LuSolver {
 public:
  explicit LuSolver(Matrix a);
  /// 1-norm reciprocal condition estimate; 0 means numerically singular.
  double rcond() const { return rcond_; }
  /// X = A^-1 B.
  Matrix solve(const Matrix& b) const;

 private:
  Matrix lu_;
  std::vector<int> ipiv_;
  double rcond_ = 0.0;
};

}  // namespace arcsim::linalg
