#pragma once

#include "xtalk/channel.hpp"

#include <utility>
#include <vector>

namespace xtalk {

enum class ScenarioTiming { AttackerFirst, VictimFirst, NoAttack };

ScenarioTiming parse_timing(std::string_view name);
std::string timing_name(ScenarioTiming t);

// Run the victim's single gate V on |0><0| with the attack channel composed
// per the timing: AttackerFirst -> V E(|0><0|) V^dag, VictimFirst ->
// E(V |0><0| V^dag), NoAttack -> V |0><0| V^dag. A null channel acts as the
// identity map. The result is trace-normalized so exactly-deterministic
// circuits stay exact under floating point. Throws ValidationError if V is
// not unitary to 1e-10.
CMat compose_scenario(ScenarioTiming timing, const CMat& victim_unitary,
                      const QuantumChannel* channel);

// P(1) for the biased-coin circuit V(lambda) = exp(-i lambda Y) (full-angle
// convention, matching the protocol's printed matrix). NoAttack gives
// sin^2(lambda).
double coin_flip_p1(double lambda, ScenarioTiming timing,
                    const QuantumChannel* channel);

// XOR circuit H -> R_Z((2 x1 - 1) pi/2) -> R_X((2 x2 - 1) pi/2) on |0>,
// half-angle R_Z / R_X conventions; returns (p0, p1).
std::pair<double, double> xor_probs(int x1, int x2, ScenarioTiming timing,
                                    const QuantumChannel* channel);

// Delta_max = |1 - min over the four inputs of max(p0, p1)|.
double xor_delta_max(ScenarioTiming timing, const QuantumChannel& channel);

// Polynomial-feature single-qubit regression classifier.
struct SqqnnModel {
  Eigen::VectorXd s;      // length 1 + degree * feature_count
  int degree = 2;         // K
  double epsilon = 1e-16; // target squashing, in (0, 1e-8]
  int feature_count = 0;  // p
};

// Least-squares fit of [1, x_j^k] features against arctanh(y (1 - epsilon)).
// Minimum-norm solution when rank-deficient. Throws ValidationError if a
// class is empty, labels are not +-1, or epsilon is out of range.
SqqnnModel sqqnn_train(const Eigen::MatrixXd& features,
                       const Eigen::VectorXd& labels, int degree,
                       double epsilon);

// Per sample: z = s . x_poly, beta = arccos(tanh z), rho =
// compose_scenario(timing, RY(beta), channel) with half-angle RY;
// prediction = sign(<sigma_z>) with sign(0) -> +1. Returns mean correctness.
double sqqnn_accuracy(const SqqnnModel& model, const Eigen::MatrixXd& features,
                      const Eigen::VectorXd& labels, ScenarioTiming timing,
                      const QuantumChannel* channel);

// Deterministic shuffled split: Fisher-Yates over row indices driven by the
// splitmix64-v1 stream (seed, "split"); the last round(test_fraction * n)
// shuffled indices form the test set.
std::pair<std::vector<int>, std::vector<int>> train_test_split(
    int n, double test_fraction, std::uint64_t seed);

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& m, const std::vector<int>& r);
Eigen::VectorXd take_rows(const Eigen::VectorXd& v, const std::vector<int>& r);

}  // namespace xtalk
