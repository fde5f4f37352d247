#pragma once

#include "xtalk/protocols.hpp"

#include <cstdint>

namespace xtalk {

// Outcome of one canary run. The z-score is always
// |p_hat - baseline| / sqrt(baseline (1 - baseline) / n_shots).
struct DetectionReport {
  double p_hat = 0.0;
  double baseline = 0.5;
  int n_shots = 0;
  double z_score = 0.0;
  bool flagged = false;
  std::uint64_t seed = 0;
  double threshold = 5.0;
};

// Run the lambda = pi/4 biased-coin canary: compute the exact p1 for the
// given timing/channel, draw n_shots Bernoulli samples from the
// splitmix64-v1 stream (seed, "canary"), and compare p_hat to the 0.5
// baseline. Requires n_shots >= 100 and threshold > 0.
DetectionReport canary_check(int n_shots, std::uint64_t seed, double threshold,
                             const QuantumChannel* channel,
                             ScenarioTiming timing);

enum class Protocol { Coin, Sqqnn };

Protocol parse_protocol(std::string_view name);
std::string protocol_name(Protocol p);

struct ContainmentReport {
  double attacker_first_impact = 0.0;
  double post_reset_impact = 0.0;
};

// Compare the protocol-metric deviation under AttackerFirst against the
// post-reset scenario (victim reset to |0><0| after the attack window, the
// protocol runs clean, any subsequent attack acts VictimFirst).
// Coin: deviation = |p1(pi/4) - 0.5|. Sqqnn: deviation = clean test
// accuracy minus attacked test accuracy (requires the dataset; the model is
// trained on the deterministic 70/30 split of the given seed).
ContainmentReport containment_compare(const QuantumChannel& channel,
                                      Protocol protocol,
                                      const Eigen::MatrixXd* features = nullptr,
                                      const Eigen::VectorXd* labels = nullptr,
                                      int degree = 2, double epsilon = 1e-16,
                                      double test_fraction = 0.3,
                                      std::uint64_t seed = 42);

}  // namespace xtalk
