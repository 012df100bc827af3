#pragma once

#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

// Floating-point eigenvalues of an embedded conjugate, ascending.  Test
// oracle and diagnostics only; the membership tests are exact.
std::vector<double> numeric_eigenvalues(const SymMatrix& A, Automorphism s = 0);

double numeric_spectral_radius(const SymMatrix& A, Automorphism s = 0);

}  // namespace cyclo
