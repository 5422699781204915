#include "hadamard/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hadamard::linalg {

std::vector<double> identity(int n) {
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 1.0;
  return a;
}

std::vector<double> multiply(int n, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        c[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
      }
    }
  }
  return c;
}

void symmetrize(int n, std::vector<double>& a) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (a[static_cast<size_t>(i) * n + j] + a[static_cast<size_t>(j) * n + i]);
      a[static_cast<size_t>(i) * n + j] = s;
      a[static_cast<size_t>(j) * n + i] = s;
    }
  }
}

double frobenius_norm(int n, const std::vector<double>& a) {
  double s = 0.0;
  for (int i = 0; i < n * n; ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

double offdiag_norm(int n, const std::vector<double>& a) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
  return std::sqrt(s);
}

namespace {

// One Jacobi rotation zeroing a(p,q); rotates rows/cols of a and the
// eigenvector accumulator v.
void rotate(int n, std::vector<double>& a, std::vector<double>& v, int p, int q) {
  const double apq = a[static_cast<size_t>(p) * n + q];
  if (apq == 0.0) return;
  const double app = a[static_cast<size_t>(p) * n + p];
  const double aqq = a[static_cast<size_t>(q) * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (int i = 0; i < n; ++i) {
    const double aip = a[static_cast<size_t>(i) * n + p];
    const double aiq = a[static_cast<size_t>(i) * n + q];
    a[static_cast<size_t>(i) * n + p] = c * aip - s * aiq;
    a[static_cast<size_t>(i) * n + q] = s * aip + c * aiq;
  }
  for (int j = 0; j < n; ++j) {
    const double apj = a[static_cast<size_t>(p) * n + j];
    const double aqj = a[static_cast<size_t>(q) * n + j];
    a[static_cast<size_t>(p) * n + j] = c * apj - s * aqj;
    a[static_cast<size_t>(q) * n + j] = s * apj + c * aqj;
  }
  a[static_cast<size_t>(p) * n + q] = 0.0;
  a[static_cast<size_t>(q) * n + p] = 0.0;

  for (int i = 0; i < n; ++i) {
    const double vip = v[static_cast<size_t>(i) * n + p];
    const double viq = v[static_cast<size_t>(i) * n + q];
    v[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
    v[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
  }
}

}  // namespace

EigenDecomposition jacobi_eigen(int n, std::vector<double> a, double tol, int max_sweeps) {
  if (n <= 0 || a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("jacobi_eigen: bad dimensions");
  symmetrize(n, a);

  std::vector<double> v = identity(n);
  if (n > 1) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (offdiag_norm(n, a) <= tol) break;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(n, a, v, p, q);
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a[static_cast<size_t>(i) * n + i];

  // sort ascending, permuting eigenvector columns to match
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return out.values[i] < out.values[j]; });
  std::vector<double> values(n);
  std::vector<double> vectors(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    values[j] = out.values[order[j]];
    for (int i = 0; i < n; ++i)
      vectors[static_cast<size_t>(i) * n + j] = v[static_cast<size_t>(i) * n + order[j]];
  }
  out.values = std::move(values);
  out.vectors = std::move(vectors);
  return out;
}

double min_eigenvalue(int n, const std::vector<double>& a) {
  return jacobi_eigen(n, a).values.front();
}

std::vector<double> apply_spectral(int n, const std::vector<double>& a,
                                   const std::function<double(double)>& fn) {
  const EigenDecomposition eig = jacobi_eigen(n, a);
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double fk = fn(eig.values[k]);
    if (fk == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double vik = eig.vectors[static_cast<size_t>(i) * n + k];
      for (int j = 0; j < n; ++j)
        out[static_cast<size_t>(i) * n + j] += fk * vik * eig.vectors[static_cast<size_t>(j) * n + k];
    }
  }
  symmetrize(n, out);
  return out;
}

namespace {

std::vector<double> spd_map(int n, const std::vector<double>& a,
                            const std::function<double(double)>& fn) {
  const EigenDecomposition eig = jacobi_eigen(n, a);
  if (eig.values.front() <= 1e-14)
    throw std::domain_error("matrix is not positive-definite");
  std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double fk = fn(eig.values[k]);
    for (int i = 0; i < n; ++i) {
      const double vik = eig.vectors[static_cast<size_t>(i) * n + k];
      for (int j = 0; j < n; ++j)
        out[static_cast<size_t>(i) * n + j] += fk * vik * eig.vectors[static_cast<size_t>(j) * n + k];
    }
  }
  symmetrize(n, out);
  return out;
}

}  // namespace

std::vector<double> spd_sqrt(int n, const std::vector<double>& a) {
  return spd_map(n, a, [](double x) { return std::sqrt(x); });
}

std::vector<double> spd_inv_sqrt(int n, const std::vector<double>& a) {
  return spd_map(n, a, [](double x) { return 1.0 / std::sqrt(x); });
}

std::vector<double> spd_log(int n, const std::vector<double>& a) {
  return spd_map(n, a, [](double x) { return std::log(x); });
}

std::vector<double> spd_pow(int n, const std::vector<double>& a, double p) {
  return spd_map(n, a, [p](double x) { return std::pow(x, p); });
}

std::vector<double> sym_exp(int n, const std::vector<double>& a) {
  return apply_spectral(n, a, [](double x) { return std::exp(x); });
}

}  // namespace hadamard::linalg
