#include "xtalk/defense.hpp"

#include "xtalk/dynamics.hpp"
#include "xtalk/io.hpp"

#include <doctest.h>

#include <cmath>

#include "test_util.hpp"

using namespace xtalk;
using namespace xtalk::testutil;

TEST_CASE("report satisfies the z-score identity") {
  const DetectionReport r =
      canary_check(10000, 1, 5.0, nullptr, ScenarioTiming::NoAttack);
  const double z =
      std::abs(r.p_hat - r.baseline) /
      std::sqrt(r.baseline * (1.0 - r.baseline) / r.n_shots);
  CHECK(r.z_score == z);
  CHECK(r.flagged == (r.z_score > r.threshold));
  CHECK(r.baseline == 0.5);
  CHECK(r.n_shots == 10000);
  CHECK(r.seed == 1);
}

TEST_CASE("clean canary does not flag") {
  const DetectionReport r =
      canary_check(10000, 1, 5.0, nullptr, ScenarioTiming::NoAttack);
  CHECK_FALSE(r.flagged);
  CHECK(std::abs(r.p_hat - 0.5) <= 0.05);
}

TEST_CASE("canary is reproducible") {
  const QuantumChannel ch = victim_channel(default_attack());
  const DetectionReport a =
      canary_check(5000, 17, 5.0, &ch, ScenarioTiming::AttackerFirst);
  const DetectionReport b =
      canary_check(5000, 17, 5.0, &ch, ScenarioTiming::AttackerFirst);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.z_score == b.z_score);
  CHECK(a.flagged == b.flagged);
}

TEST_CASE("no false flags across 200 seeded clean runs") {
  int flags = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed)
    if (canary_check(10000, seed, 5.0, nullptr, ScenarioTiming::NoAttack)
            .flagged)
      ++flags;
  CHECK(flags == 0);
}

TEST_CASE("canary argument validation") {
  CHECK_THROWS_AS(canary_check(99, 1, 5.0, nullptr, ScenarioTiming::NoAttack),
                  ValidationError);
  CHECK_THROWS_AS(
      canary_check(1000, 1, 0.0, nullptr, ScenarioTiming::NoAttack),
      ValidationError);
}

TEST_CASE("containment on the identity channel reports zero impact") {
  const QuantumChannel id =
      reconstruct_channel([](const CMat& r) { return r; });
  const ContainmentReport r = containment_compare(id, Protocol::Coin);
  CHECK(std::abs(r.attacker_first_impact) <= 1e-12);
  CHECK(std::abs(r.post_reset_impact) <= 1e-12);
}

TEST_CASE("coin containment on default attacks") {
  for (const AttackConfig& cfg : {default_attack(), strong_attack()}) {
    const QuantumChannel ch = victim_channel(cfg);
    const ContainmentReport r = containment_compare(ch, Protocol::Coin);
    CHECK(r.attacker_first_impact >= 0.0);
    CHECK(r.post_reset_impact <= r.attacker_first_impact + 1e-12);
  }
}

TEST_CASE("sqqnn containment requires a dataset") {
  const QuantumChannel ch = victim_channel(default_attack());
  CHECK_THROWS_AS(containment_compare(ch, Protocol::Sqqnn), ValidationError);
}

TEST_CASE("sqqnn containment runs on the bundled dataset") {
  const Dataset data = load_dataset(XTALK_IRIS_PATH);
  const QuantumChannel ch = victim_channel(strong_attack());
  const ContainmentReport r = containment_compare(
      ch, Protocol::Sqqnn, &data.features, &data.labels, 2, 1e-16, 0.3, 42);
  CHECK(r.post_reset_impact <= r.attacker_first_impact + 1e-12);
}

TEST_CASE("protocol names round-trip") {
  CHECK(parse_protocol("coin") == Protocol::Coin);
  CHECK(parse_protocol("sqqnn") == Protocol::Sqqnn);
  CHECK(protocol_name(Protocol::Coin) == "coin");
  CHECK_THROWS_AS(parse_protocol("dice"), ValidationError);
}
