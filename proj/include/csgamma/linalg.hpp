#pragma once

#include <utility>
#include <vector>

#include "csgamma/mat.hpp"

namespace csgamma::linalg {

/// Cholesky factor L (lower triangular) of a Hermitian positive definite A,
/// A = L * L^H.  Throws std::invalid_argument if a pivot is not positive.
Mat cholesky_lower(const Mat& a);

struct EigResult {
  std::vector<double> values;  // descending
  Mat vectors;                 // columns, same order as values
};

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.
/// Off-diagonal Frobenius norm is driven below tol * ||A||_F (max_sweeps cap).
EigResult jacobi_eigh_real(const Mat& a, double tol = 1e-12, int max_sweeps = 100);

/// Smallest and largest eigenvalue of a Hermitian matrix.  Complex input is
/// handled through the real symmetric 2n x 2n embedding [[Re,-Im],[Im,Re]],
/// which duplicates the spectrum but preserves the extremes.
std::pair<double, double> eig_range_hermitian(const Mat& a, double tol = 1e-12,
                                              int max_sweeps = 100);

/// Largest eigenvalue and a unit eigenvector of a Hermitian matrix, via the
/// same real embedding.  Ties resolved toward the lowest column index.
std::pair<double, std::vector<Complex>> top_eig_hermitian(const Mat& a,
                                                          double tol = 1e-12,
                                                          int max_sweeps = 100);

struct NnlsResult {
  std::vector<double> coeff;     // nonnegative coefficients, one per column
  std::vector<double> residual;  // target - cols * coeff
  double kkt_residual = 0.0;     // scaled stationarity/feasibility defect
  int iterations = 0;
  bool converged = false;
};

/// min_{x >= 0} || target - sum_j x_j cols[j] ||_2 by the Lawson-Hanson
/// active-set method.  Ties in the entering-variable choice go to the lowest
/// index; iteration cap is 10 * cols.size().
NnlsResult nnls(const std::vector<std::vector<double>>& cols,
                const std::vector<double>& target, double tol = 1e-12);

}  // namespace csgamma::linalg
