#pragma once

#include <functional>
#include <vector>

namespace hadamard::linalg {

// Dense row-major n-by-n helpers sized for small symmetric matrices.

std::vector<double> identity(int n);
std::vector<double> multiply(int n, const std::vector<double>& a, const std::vector<double>& b);
void symmetrize(int n, std::vector<double>& a);
double frobenius_norm(int n, const std::vector<double>& a);
double offdiag_norm(int n, const std::vector<double>& a);

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major, column j pairs with values[j]
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
// tol. Input is symmetrized first.
EigenDecomposition jacobi_eigen(int n, std::vector<double> a, double tol = 1e-12,
                                int max_sweeps = 100);

double min_eigenvalue(int n, const std::vector<double>& a);

// V f(D) V^T for the spectral decomposition of a symmetric matrix.
std::vector<double> apply_spectral(int n, const std::vector<double>& a,
                                   const std::function<double(double)>& fn);

// Spectral maps of symmetric positive-definite matrices. Throw
// std::domain_error when an eigenvalue is at or below 1e-14.
std::vector<double> spd_sqrt(int n, const std::vector<double>& a);
std::vector<double> spd_inv_sqrt(int n, const std::vector<double>& a);
std::vector<double> spd_log(int n, const std::vector<double>& a);
std::vector<double> spd_pow(int n, const std::vector<double>& a, double p);
std::vector<double> sym_exp(int n, const std::vector<double>& a);

}  // namespace hadamard::linalg
