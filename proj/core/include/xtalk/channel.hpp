#pragma once

#include "xtalk/linalg.hpp"

#include <array>
#include <functional>

namespace xtalk {

// Single-qubit channel stored canonically as its 4x4 Choi matrix in the
// input (x) output convention: choi = sum_{mn} |m><n| (x) E(|m><n|).
// Hermitian, PSD (after documented clipping), trace 2, and the partial
// trace over the output factor is the identity for trace-preserving maps.
struct QuantumChannel {
  CMat choi;
};

// Process matrix in the Pauli basis {I, sigma_x, sigma_y, sigma_z}:
// E(rho) = sum_{mn} chi_mn sigma_m rho sigma_n^dag. Hermitian, PSD,
// trace 1 (identity channel has chi_00 = 1).
struct ChiMatrix {
  CMat chi;
};

// Exactly four 2x2 Kraus operators, zero-padded, eigenvalue-descending;
// sum_j K_j^dag K_j = I to 1e-8.
struct KrausSet {
  std::array<CMat, 4> ops;
};

using ChannelFn = std::function<CMat(const CMat&)>;

// Tomography inputs, in order: |0><0|, |1><1|, |+><+|, |+i><+i|.
std::array<CMat, 4> qpt_inputs();

// Build the Choi matrix from the action of `apply` on the four tomography
// inputs, extending to off-diagonal elements by linearity:
//   E(|0><1|) = E(rho_+) + i E(rho_+i) - (1+i)/2 (E(rho_0) + E(rho_1)).
// Hermitizes, clips eigenvalues in [-1e-9, 0), renormalizes the trace.
// Throws NumericalError if trace preservation is violated beyond 1e-6
// (message reports the deficit) or if an eigenvalue is below -1e-9.
QuantumChannel reconstruct_channel(const ChannelFn& apply);

// Apply the channel to a 2x2 state via its Choi blocks.
CMat channel_apply(const QuantumChannel& ch, const CMat& rho);

// Project the Choi matrix onto the Pauli product basis. The canonical
// input(x)output Choi is first reshuffled to the operator-sum form
// D = sum_{mn} chi_mn sigma_m (x) sigma_n^* via
// D[2i+j, 2k+l] = choi[2k+i, 2l+j], then chi_mn = Tr[(sigma_m (x)
// sigma_n^*)^dag D] / 4. Result is Hermitized, clipped, trace-normalized.
ChiMatrix chi_from_choi(const QuantumChannel& ch);

// Eigendecompose chi (descending); K_j = sqrt(lambda_j) sum_m v_j[m] sigma_m
// for eigenvalues > 1e-10, zero-padded to exactly 4 operators.
// Throws NumericalError if an eigenvalue is below -1e-6.
KrausSet kraus_from_chi(const ChiMatrix& x);

CMat kraus_apply(const KrausSet& k, const CMat& rho);

// ||sum K^dag K - I||_F; completeness check helper.
double kraus_completeness_defect(const KrausSet& k);

// Literal linear-inversion formula
//   chi_mn = 1/2 sum_i Tr(sigma_m rho_i) Tr(sigma_n^dag E(rho_i))
// over the four tomography inputs. Emitted for comparison only: it does not
// reproduce chi_00 = 1 for the identity map (it yields 2) and is never
// consumed downstream.
CMat chi_linear_inversion_diagnostic(const ChannelFn& apply);

}  // namespace xtalk
