#include "xtalk/linalg.hpp"

namespace xtalk {

namespace {

CMat make_pauli(int m) {
  CMat p(2, 2);
  const complexd i(0.0, 1.0);
  switch (m) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -i, i, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: throw ValidationError("pauli: index out of range");
  }
  return p;
}

}  // namespace

const CMat& pauli(int m) {
  static const CMat table[4] = {make_pauli(0), make_pauli(1), make_pauli(2),
                                make_pauli(3)};
  if (m < 0 || m > 3) throw ValidationError("pauli: index out of range");
  return table[m];
}

CMat kron(const CMat& a, const CMat& b) {
  const Eigen::Index m = a.rows(), n = a.cols(), p = b.rows(), q = b.cols();
  CMat out(m * p, n * q);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out.block(i * p, j * q, p, q) = a(i, j) * b;
  return out;
}

CMat partial_trace_keep_last(const CMat& rho) {
  if (rho.rows() != 8 || rho.cols() != 8)
    throw ValidationError("partial_trace_keep_last: expected an 8x8 matrix");
  CMat out = CMat::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 4; ++a) out(i, j) += rho(2 * a + i, 2 * a + j);
  return out;
}

CMat expm_hermitian(const CMat& h, double tau) {
  if (!is_hermitian(h, 1e-10))
    throw ValidationError("expm_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es((h + h.adjoint()) / 2.0);
  const Eigen::VectorXd& lam = es.eigenvalues();
  CVec phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    phases(k) = std::exp(complexd(0.0, -lam(k) * tau));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

void validate_density(const CMat& rho, const std::string& what) {
  if (rho.rows() != rho.cols())
    throw ValidationError(what + ": density matrix must be square");
  if (!is_hermitian(rho, 1e-10))
    throw ValidationError(what + ": density matrix not Hermitian to 1e-10");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10)
    throw ValidationError(what + ": density matrix trace differs from 1");
  if (min_eigenvalue(rho) < -1e-10)
    throw ValidationError(what + ": density matrix not positive semidefinite");
}

void validate_unitary(const CMat& u, double tol, const std::string& what) {
  if (u.rows() != u.cols()) throw ValidationError(what + ": not square");
  const CMat d = u.adjoint() * u - CMat::Identity(u.rows(), u.cols());
  if (d.norm() > tol) throw ValidationError(what + ": matrix is not unitary");
}

}  // namespace xtalk
