#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace xtalk {

using complexd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Contract violations: bad arguments, malformed inputs, invalid states.
// Mapped to exit code 1 by the CLI.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures beyond documented tolerance windows (non-physical
// eigenvalues, non-convergence). Mapped to exit code 2 by the CLI.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pauli basis {I, sigma_x, sigma_y, sigma_z}, indexed 0..3.
const CMat& pauli(int m);

CMat kron(const CMat& a, const CMat& b);

// Trace over q0 and q1 of a 3-qubit register ordered q0 (x) q1 (x) q2
// (basis index b = 4*b0 + 2*b1 + b2); returns the 2x2 state of q2.
CMat partial_trace_keep_last(const CMat& rho);

// U = exp(-i*h*tau) via Hermitian eigendecomposition; unitary by
// construction. Throws ValidationError if h is not Hermitian to 1e-10.
CMat expm_hermitian(const CMat& h, double tau);

bool approx_equal(const CMat& a, const CMat& b, double tol);
bool is_hermitian(const CMat& m, double tol);

// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const CMat& m);

// Density-matrix invariants: Hermitian to 1e-10, trace 1 to 1e-10,
// min eigenvalue >= -1e-10. Throws ValidationError naming `what`.
void validate_density(const CMat& rho, const std::string& what);

// ||u^dag u - I||_F <= tol, else ValidationError naming `what`.
void validate_unitary(const CMat& u, double tol, const std::string& what);

}  // namespace xtalk
