#include "csgamma/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csgamma::linalg {

Mat cholesky_lower(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("cholesky: not square");
  const int n = a.rows();
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    Complex d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * std::conj(l(j, k));
    double dj = d.real();
    if (dj <= 0.0 || !std::isfinite(dj))
      throw std::invalid_argument("cholesky: matrix is not positive definite");
    double ljj = std::sqrt(dj);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

namespace {

double off_diag_fro(const Mat& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

double full_fro(const Mat& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = 0; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// Real symmetric embedding of a Hermitian matrix: [[Re, -Im], [Im, Re]].
// Spectrum is that of the input, each eigenvalue twice; an eigenvector
// (a; b) of the embedding gives a + i*b for the original matrix.
Mat hermitian_embed(const Mat& a) {
  const int n = a.rows();
  Mat b(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = a(i, j).real(), im = a(i, j).imag();
      b(i, j) = re;
      b(i, n + j) = -im;
      b(n + i, j) = im;
      b(n + i, n + j) = re;
    }
  return b;
}

}  // namespace

EigResult jacobi_eigh_real(const Mat& a, double tol, int max_sweeps) {
  if (a.rows() != a.cols()) throw std::invalid_argument("jacobi: not square");
  const int n = a.rows();
  Mat d = a;  // working copy, becomes diagonal
  Mat v = Mat::identity(n);
  const double scale = std::max(1e-300, full_fro(a));

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diag_fro(d) <= tol * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = d(p, q).real();
        if (std::abs(apq) <= 1e-300) continue;
        double app = d(p, p).real(), aqq = d(q, q).real();
        double theta = (aqq - app) / (2.0 * apq);
        double t = sign_of(theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int k = 0; k < n; ++k) {
          double dkp = d(k, p).real(), dkq = d(k, q).real();
          d(k, p) = c * dkp - s * dkq;
          d(k, q) = s * dkp + c * dkq;
        }
        for (int k = 0; k < n; ++k) {
          double dpk = d(p, k).real(), dqk = d(q, k).real();
          d(p, k) = c * dpk - s * dqk;
          d(q, k) = s * dpk + c * dqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p).real(), vkq = v(k, q).real();
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return d(i, i).real() > d(j, j).real(); });

  EigResult res;
  res.values.resize(n);
  res.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    res.values[j] = d(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
  }
  return res;
}

std::pair<double, double> eig_range_hermitian(const Mat& a, double tol,
                                              int max_sweeps) {
  EigResult eig = a.all_real() ? jacobi_eigh_real(a, tol, max_sweeps)
                               : jacobi_eigh_real(hermitian_embed(a), tol, max_sweeps);
  return {eig.values.back(), eig.values.front()};
}

std::pair<double, std::vector<Complex>> top_eig_hermitian(const Mat& a, double tol,
                                                          int max_sweeps) {
  const int n = a.rows();
  if (a.all_real()) {
    EigResult eig = jacobi_eigh_real(a, tol, max_sweeps);
    std::vector<Complex> u(n);
    for (int i = 0; i < n; ++i) u[i] = eig.vectors(i, 0);
    return {eig.values[0], u};
  }
  EigResult eig = jacobi_eigh_real(hermitian_embed(a), tol, max_sweeps);
  std::vector<Complex> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = Complex(eig.vectors(i, 0).real(), eig.vectors(n + i, 0).real());
  return {eig.values[0], u};
}

namespace {

// Least squares on a column subset by modified Gram-Schmidt QR, recomputed
// from scratch each call (problems here are tiny).
std::vector<double> ls_on_set(const std::vector<std::vector<double>>& cols,
                              const std::vector<double>& target,
                              const std::vector<int>& set) {
  const size_t n = target.size(), k = set.size();
  std::vector<std::vector<double>> q(k, std::vector<double>(n));
  std::vector<std::vector<double>> r(k, std::vector<double>(k, 0.0));
  for (size_t j = 0; j < k; ++j) {
    std::vector<double> v = cols[set[j]];
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t i = 0; i < j; ++i) {
        double dot = 0.0;
        for (size_t t = 0; t < n; ++t) dot += q[i][t] * v[t];
        r[i][j] += dot;
        for (size_t t = 0; t < n; ++t) v[t] -= dot * q[i][t];
      }
    }
    double nv = 0.0;
    for (double x : v) nv += x * x;
    nv = std::sqrt(nv);
    r[j][j] = nv;
    if (nv > 0.0)
      for (size_t t = 0; t < n; ++t) q[j][t] = v[t] / nv;
  }
  std::vector<double> s(k, 0.0);
  for (size_t jj = k; jj-- > 0;) {
    double rhs = 0.0;
    for (size_t t = 0; t < n; ++t) rhs += q[jj][t] * target[t];
    for (size_t m = jj + 1; m < k; ++m) rhs -= r[jj][m] * s[m];
    s[jj] = r[jj][jj] > 0.0 ? rhs / r[jj][jj] : 0.0;
  }
  return s;
}

}  // namespace

NnlsResult nnls(const std::vector<std::vector<double>>& cols,
                const std::vector<double>& target, double tol) {
  const int m = static_cast<int>(cols.size());
  const size_t n = target.size();
  for (const auto& c : cols)
    if (c.size() != n) throw std::invalid_argument("nnls: column length mismatch");

  NnlsResult res;
  res.coeff.assign(m, 0.0);
  res.residual = target;
  if (m == 0) {
    res.converged = true;
    return res;
  }

  double colscale = 0.0;
  for (const auto& c : cols) {
    double s = 0.0;
    for (double x : c) s += x * x;
    colscale = std::max(colscale, std::sqrt(s));
  }
  double tscale = 0.0;
  for (double x : target) tscale += x * x;
  tscale = std::sqrt(tscale);
  const double wtol = tol * std::max(1.0, colscale * tscale);

  std::vector<bool> passive(m, false);
  std::vector<bool> rejected(m, false);  // degenerate candidates, per stationary point
  std::vector<int> pset;
  const int max_iter = 10 * m;
  int iter = 0;

  auto refresh_residual = [&]() {
    res.residual = target;
    for (int j : pset)
      for (size_t t = 0; t < n; ++t) res.residual[t] -= res.coeff[j] * cols[j][t];
  };

  while (iter < max_iter) {
    // dual w = cols^T residual over candidate columns
    int best = -1;
    double wbest = wtol;
    for (int j = 0; j < m; ++j) {
      if (passive[j] || rejected[j]) continue;
      double wj = 0.0;
      for (size_t t = 0; t < n; ++t) wj += cols[j][t] * res.residual[t];
      if (wj > wbest) {  // strict: ties keep the lowest index
        wbest = wj;
        best = j;
      }
    }
    if (best < 0) {
      res.converged = true;
      break;
    }

    std::vector<int> trial = pset;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), best), best);
    std::vector<double> s = ls_on_set(cols, target, trial);
    {
      size_t bi = std::lower_bound(trial.begin(), trial.end(), best) - trial.begin();
      if (s[bi] <= 0.0) {
        // numerically dependent or non-improving entry; skip it this round
        rejected[best] = true;
        ++iter;
        continue;
      }
    }
    passive[best] = true;
    pset = trial;
    std::fill(rejected.begin(), rejected.end(), false);

    while (iter < max_iter) {
      ++iter;
      double smin = 1.0;
      for (double x : s) smin = std::min(smin, x);
      if (smin > 0.0) {
        for (size_t i = 0; i < pset.size(); ++i) res.coeff[pset[i]] = s[i];
        break;
      }
      double alpha = 1.0;
      for (size_t i = 0; i < pset.size(); ++i) {
        if (s[i] <= 0.0) {
          double xi = res.coeff[pset[i]];
          double denom = xi - s[i];
          if (denom > 0.0) alpha = std::min(alpha, xi / denom);
        }
      }
      std::vector<int> keep;
      for (size_t i = 0; i < pset.size(); ++i) {
        double xi = res.coeff[pset[i]];
        double xnew = xi + alpha * (s[i] - xi);
        if (s[i] <= 0.0 && xnew <= tol * std::max(1.0, colscale)) xnew = 0.0;
        res.coeff[pset[i]] = xnew;
        if (xnew == 0.0)
          passive[pset[i]] = false;
        else
          keep.push_back(pset[i]);
      }
      pset = keep;
      s = ls_on_set(cols, target, pset);
    }

    refresh_residual();
  }

  if (!res.converged) {
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      if (passive[j]) continue;
      double wj = 0.0;
      for (size_t t = 0; t < n; ++t) wj += cols[j][t] * res.residual[t];
      if (wj > wtol) ok = false;
    }
    res.converged = ok;
  }
  res.iterations = iter;

  // KKT defect: dual feasibility everywhere, stationarity on the support,
  // primal feasibility; scaled by the data magnitude.
  double kkt = 0.0;
  const double scale = std::max(1.0, colscale * std::max(1.0, tscale));
  for (int j = 0; j < m; ++j) {
    double wj = 0.0;
    for (size_t t = 0; t < n; ++t) wj += cols[j][t] * res.residual[t];
    kkt = std::max(kkt, std::max(0.0, -res.coeff[j]));
    if (res.coeff[j] > 0.0)
      kkt = std::max(kkt, std::abs(wj) / scale);
    else
      kkt = std::max(kkt, std::max(0.0, wj) / scale);
  }
  res.kkt_residual = kkt;
  return res;
}

}  // namespace csgamma::linalg
