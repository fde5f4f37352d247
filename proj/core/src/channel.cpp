#include "xtalk/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace xtalk {

namespace {

// Eigen-clip a Hermitian matrix: eigenvalues in [-floor_tol, 0) go to 0,
// anything below -floor_tol is a hard error; result is rescaled to `trace`.
CMat clip_psd(const CMat& m, double floor_tol, double trace,
              const std::string& what) {
  Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0);
  Eigen::VectorXd lam = es.eigenvalues();
  if (lam.minCoeff() < -floor_tol) {
    std::ostringstream os;
    os << what << ": eigenvalue " << lam.minCoeff()
       << " below the -" << floor_tol << " clip window";
    throw NumericalError(os.str());
  }
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    lam(k) = std::max(lam(k), 0.0);
  CMat out = es.eigenvectors() * lam.asDiagonal().toDenseMatrix().cast<complexd>() *
             es.eigenvectors().adjoint();
  const double tr = out.trace().real();
  if (tr > 0.0) out *= trace / tr;
  return (out + out.adjoint()) / 2.0;
}

}  // namespace

std::array<CMat, 4> qpt_inputs() {
  const complexd i(0.0, 1.0);
  CMat r0(2, 2), r1(2, 2), rp(2, 2), ri(2, 2);
  r0 << 1, 0, 0, 0;
  r1 << 0, 0, 0, 1;
  rp << 0.5, 0.5, 0.5, 0.5;
  ri << 0.5, -0.5 * i, 0.5 * i, 0.5;
  return {r0, r1, rp, ri};
}

QuantumChannel reconstruct_channel(const ChannelFn& apply) {
  const auto ins = qpt_inputs();
  std::array<CMat, 4> outs;
  for (int k = 0; k < 4; ++k) outs[k] = apply(ins[k]);

  const complexd i(0.0, 1.0);
  const CMat e01 =
      outs[2] + i * outs[3] - (1.0 + i) / 2.0 * (outs[0] + outs[1]);

  CMat choi = CMat::Zero(4, 4);
  choi.block(0, 0, 2, 2) = outs[0];
  choi.block(2, 2, 2, 2) = outs[1];
  choi.block(0, 2, 2, 2) = e01;
  choi.block(2, 0, 2, 2) = e01.adjoint();
  choi = (choi + choi.adjoint()) / 2.0;

  CMat tp = CMat::Zero(2, 2);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int k = 0; k < 2; ++k) tp(m, n) += choi(2 * m + k, 2 * n + k);
  const double deficit = (tp - CMat::Identity(2, 2)).norm();
  if (deficit > 1e-6) {
    std::ostringstream os;
    os << "reconstruct_channel: trace preservation violated, deficit "
       << deficit;
    throw NumericalError(os.str());
  }

  return {clip_psd(choi, 1e-9, 2.0, "reconstruct_channel")};
}

CMat channel_apply(const QuantumChannel& ch, const CMat& rho) {
  CMat out = CMat::Zero(2, 2);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      out += rho(m, n) * ch.choi.block(2 * m, 2 * n, 2, 2);
  return out;
}

ChiMatrix chi_from_choi(const QuantumChannel& ch) {
  CMat d(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          d(2 * i + j, 2 * k + l) = ch.choi(2 * k + i, 2 * l + j);

  CMat chi(4, 4);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const CMat basis = kron(pauli(m), pauli(n).conjugate());
      chi(m, n) = (basis.adjoint() * d).trace() / 4.0;
    }
  chi = (chi + chi.adjoint()) / 2.0;
  return {clip_psd(chi, 1e-9, 1.0, "chi_from_choi")};
}

KrausSet kraus_from_chi(const ChiMatrix& x) {
  Eigen::SelfAdjointEigenSolver<CMat> es((x.chi + x.chi.adjoint()) / 2.0);
  std::vector<int> order = {3, 2, 1, 0};  // solver returns ascending

  KrausSet out;
  int slot = 0;
  for (int idx : order) {
    const double lam = es.eigenvalues()(idx);
    if (lam < -1e-6) {
      std::ostringstream os;
      os << "kraus_from_chi: non-physical chi eigenvalue " << lam;
      throw NumericalError(os.str());
    }
    if (lam <= 1e-10) continue;
    CVec v = es.eigenvectors().col(idx);
    for (int m = 0; m < 4; ++m) {
      if (std::abs(v(m)) > 1e-12) {
        const complexd phase = v(m) / std::abs(v(m));
        v /= phase;
        break;
      }
    }
    CMat k = CMat::Zero(2, 2);
    for (int m = 0; m < 4; ++m) k += v(m) * pauli(m);
    out.ops[slot++] = std::sqrt(lam) * k;
  }
  for (; slot < 4; ++slot) out.ops[slot] = CMat::Zero(2, 2);
  return out;
}

CMat kraus_apply(const KrausSet& k, const CMat& rho) {
  CMat out = CMat::Zero(2, 2);
  for (const CMat& op : k.ops) out += op * rho * op.adjoint();
  return out;
}

double kraus_completeness_defect(const KrausSet& k) {
  CMat s = CMat::Zero(2, 2);
  for (const CMat& op : k.ops) s += op.adjoint() * op;
  return (s - CMat::Identity(2, 2)).norm();
}

CMat chi_linear_inversion_diagnostic(const ChannelFn& apply) {
  const auto ins = qpt_inputs();
  CMat chi = CMat::Zero(4, 4);
  for (const CMat& rho : ins) {
    const CMat rho_out = apply(rho);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        chi(m, n) += 0.5 * (pauli(m) * rho).trace() *
                     (pauli(n).adjoint() * rho_out).trace();
  }
  return chi;
}

}  // namespace xtalk
