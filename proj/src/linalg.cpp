#include "arcsim/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace arcsim::linalg {

namespace {

lapack_complex_double* lp(Matrix& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}

lapack_complex_double* lp(Vector& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}

void check(int info, const char* routine) {
  if (info != 0) {
    throw std::runtime_error(std::string(routine) + " failed, info=" + std::to_string(info));
  }
}

}  // namespace

GeneralEig eig_general(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_general: matrix not square");
  const int n = static_cast<int>(a.rows());
  Matrix work = a;
  GeneralEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  check(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, lp(work), n, lp(out.values), nullptr, n,
                      lp(out.vectors), n),
        "zgeev");
  return out;
}

Vector eigvals_general(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigvals_general: matrix not square");
  const int n = static_cast<int>(a.rows());
  Matrix work = a;
  Vector values(n);
  check(LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, lp(work), n, lp(values), nullptr, n, nullptr,
                      n),
        "zgeev");
  return values;
}

HermitianEig eig_hermitian(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
  const int n = static_cast<int>(a.rows());
  HermitianEig out;
  out.vectors = a;
  out.values.resize(n);
  check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, lp(out.vectors), n, out.values.data()),
        "zheevd");
  return out;
}

RealVector eigvals_hermitian(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigvals_hermitian: matrix not square");
  const int n = static_cast<int>(a.rows());
  Matrix work = a;
  RealVector values(n);
  check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, lp(work), n, values.data()), "zheevd");
  return values;
}

LuSolver::LuSolver(Matrix a) : lu_(std::move(a)), ipiv_(lu_.rows()) {
  if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LuSolver: matrix not square");
  const int n = static_cast<int>(lu_.rows());
  const double anorm = lu_.cwiseAbs().colwise().sum().maxCoeff();
  const int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, lp(lu_), n, ipiv_.data());
  if (info > 0) {
    rcond_ = 0.0;  // exactly singular pivot
    return;
  }
  check(info, "zgetrf");
  check(LAPACKE_zgecon(LAPACK_COL_MAJOR, '1', n, lp(lu_), n, anorm, &rcond_), "zgecon");
}

Matrix LuSolver::solve(const Matrix& b) const {
  if (rcond_ == 0.0) throw std::runtime_error("LuSolver: singular matrix");
  if (b.rows() != lu_.rows()) throw std::invalid_argument("LuSolver::solve: size mismatch");
  const int n = static_cast<int>(lu_.rows());
  Matrix x = b;
  check(LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, static_cast<int>(b.cols()),
                       reinterpret_cast<const lapack_complex_double*>(lu_.data()), n, ipiv_.data(),
                       lp(x), n),
        "zgetrs");
  return x;
}

}  // namespace arcsim::linalg
