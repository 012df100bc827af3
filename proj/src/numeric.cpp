#include "cyclo/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace cyclo {

std::vector<double> numeric_eigenvalues(const SymMatrix& A, Automorphism s) {
  const int n = A.n();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = A.at(i, j).galois_raw(s).approx();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

double numeric_spectral_radius(const SymMatrix& A, Automorphism s) {
  double r = 0;
  for (double v : numeric_eigenvalues(A, s)) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace cyclo
