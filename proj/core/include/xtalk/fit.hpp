#pragma once

#include "xtalk/channel.hpp"

namespace xtalk {

// Best-fit logical rotation model for a reconstructed channel.
struct FitResult {
  double theta = 0.0;   // radians, canonicalized to [-pi/2, pi/2)
  double loss = 0.0;    // squared Frobenius residual at (theta, iso)
  CMat iso;             // 4x4 unitary gauge, ||iso^dag iso - I||_F <= 1e-8
  int iterations = 0;   // alternating rounds of the winning start
  bool converged = false;
};

// Model Kraus set
//   { I/2, RY(-theta) X RY(theta) / 2, X/2, RY(-theta) X RY(theta) X / 2 }
// with RY(theta) = exp(-i theta sigma_y / 2); complete for every theta.
KrausSet theory_kraus(double theta);

// Vectorize each Kraus operator into a length-4 row (row-major) and stack
// into a 4x4 matrix.
CMat stack_kraus(const KrausSet& k);

// Global minimizer of sum_j ||K_exp,j - sum_i U_ji K_th,i||_F^2 over
// unitaries: U = V W^dag from the SVD of stack(exp) stack(th)^dag.
CMat procrustes_isometry(const KrausSet& exp, const KrausSet& th);

// ||stack(exp) - u * stack(th)||_F^2.
double fit_loss(const KrausSet& exp, const CMat& u, const KrausSet& th);

// Multi-start alternating fit: 64-point theta grid on [-pi/2, pi/2); each
// start alternates a closed-form Procrustes step with a golden-section
// refinement of theta (accepted only when it strictly lowers the loss, so
// the loss sequence is non-increasing) until the per-round change is below
// 1e-12 or 100 rounds. Ties within 1e-9 loss are broken toward smaller
// |theta|. The winner gets a final golden-section pass with the gauge
// re-optimized at every trial theta, accepted only on a decisive loss
// improvement. Throws ValidationError if `exp` is not complete to 1e-8.
FitResult fit_channel(const KrausSet& exp);

// Fold an angle into [-pi/2, pi/2) (the model is pi-periodic).
double canonical_theta(double theta);

}  // namespace xtalk
