#include "xtalk/defense.hpp"

#include "xtalk/rng.hpp"

#include <cmath>

namespace xtalk {

DetectionReport canary_check(int n_shots, std::uint64_t seed, double threshold,
                             const QuantumChannel* channel,
                             ScenarioTiming timing) {
  if (n_shots < 100)
    throw ValidationError("canary_check: n_shots must be >= 100");
  if (!(threshold > 0.0))
    throw ValidationError("canary_check: threshold must be > 0");

  const double p1 = coin_flip_p1(kPi / 4.0, timing, channel);
  const Rng rng(seed, "canary");
  int hits = 0;
  for (int i = 0; i < n_shots; ++i)
    if (rng.uniform01(static_cast<std::uint64_t>(i)) < p1) ++hits;

  DetectionReport r;
  r.p_hat = static_cast<double>(hits) / static_cast<double>(n_shots);
  r.baseline = 0.5;
  r.n_shots = n_shots;
  r.z_score = std::abs(r.p_hat - r.baseline) /
              std::sqrt(r.baseline * (1.0 - r.baseline) / n_shots);
  r.threshold = threshold;
  r.flagged = r.z_score > threshold;
  r.seed = seed;
  return r;
}

Protocol parse_protocol(std::string_view name) {
  if (name == "coin") return Protocol::Coin;
  if (name == "sqqnn") return Protocol::Sqqnn;
  throw ValidationError("unknown protocol: " + std::string(name) +
                        " (expected coin or sqqnn)");
}

std::string protocol_name(Protocol p) {
  return p == Protocol::Coin ? "coin" : "sqqnn";
}

ContainmentReport containment_compare(const QuantumChannel& channel,
                                      Protocol protocol,
                                      const Eigen::MatrixXd* features,
                                      const Eigen::VectorXd* labels,
                                      int degree, double epsilon,
                                      double test_fraction,
                                      std::uint64_t seed) {
  ContainmentReport r;
  if (protocol == Protocol::Coin) {
    const double ideal = coin_flip_p1(kPi / 4.0, ScenarioTiming::NoAttack,
                                      nullptr);
    r.attacker_first_impact = std::abs(
        coin_flip_p1(kPi / 4.0, ScenarioTiming::AttackerFirst, &channel) -
        ideal);
    r.post_reset_impact = std::abs(
        coin_flip_p1(kPi / 4.0, ScenarioTiming::VictimFirst, &channel) -
        ideal);
    return r;
  }

  if (features == nullptr || labels == nullptr)
    throw ValidationError(
        "containment_compare: sqqnn protocol requires a dataset");
  const auto [train_idx, test_idx] = train_test_split(
      static_cast<int>(features->rows()), test_fraction, seed);
  const SqqnnModel model =
      sqqnn_train(take_rows(*features, train_idx), take_rows(*labels, train_idx),
                  degree, epsilon);
  const Eigen::MatrixXd xt = take_rows(*features, test_idx);
  const Eigen::VectorXd yt = take_rows(*labels, test_idx);
  const double base =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::NoAttack, nullptr);
  r.attacker_first_impact =
      base - sqqnn_accuracy(model, xt, yt, ScenarioTiming::AttackerFirst,
                            &channel);
  r.post_reset_impact =
      base - sqqnn_accuracy(model, xt, yt, ScenarioTiming::VictimFirst,
                            &channel);
  return r;
}

}  // namespace xtalk
