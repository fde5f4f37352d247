// Acceptance gate: one check per release criterion, run end to end with the
// tolerances pinned in code. Each criterion prints a single PASS/FAIL line
// with the measured values; the process exits nonzero if any criterion
// fails.

#include "xtalk/analysis.hpp"
#include "xtalk/defense.hpp"
#include "xtalk/io.hpp"
#include "xtalk/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace xtalk;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s -- %s\n", ok ? "PASS" : "FAIL", idx,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

ChannelFn random_attack_map(const Rng& rng, std::uint64_t block) {
  const CMat u = random_unitary(8, rng, block);
  CMat aux = CMat::Zero(4, 4);
  aux(0, 0) = 1.0;
  return [u, aux](const CMat& rho_v) {
    return partial_trace_keep_last(u * kron(aux, rho_v) * u.adjoint());
  };
}

KrausSet remix(const KrausSet& k, const CMat& u) {
  KrausSet out;
  for (int j = 0; j < 4; ++j) {
    out.ops[j] = CMat::Zero(2, 2);
    for (int i = 0; i < 4; ++i) out.ops[j] += u(j, i) * k.ops[i];
  }
  return out;
}

double mod_pi_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kPi));
}

AttackConfig default_attack() { return AttackConfig{}; }

AttackConfig strong_attack() {
  AttackConfig cfg;
  cfg.pulse_q0.amplitude = 1.0;
  cfg.pulse_q1.amplitude = 1.0;
  return cfg;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const Rng rng(1001, "accept-roundtrip");
  double worst = 0.0;
  for (std::uint64_t blk = 0; blk < 100; ++blk) {
    const ChannelFn apply = random_attack_map(rng, blk);
    const QuantumChannel ch = reconstruct_channel(apply);
    const KrausSet kraus = kraus_from_chi(chi_from_choi(ch));
    for (std::uint64_t s = 0; s < 20; ++s) {
      const CMat rho = random_density2(rng, 100000 + 20 * blk + s);
      worst =
          std::max(worst, (kraus_apply(kraus, rho) - apply(rho)).norm());
    }
  }
  const double elapsed = seconds_since(start);
  report(1, "channel round-trip on 100 random CPTP channels",
         worst <= 1e-8 && elapsed <= 30.0,
         "max action error " + fmt(worst) + " (limit 1e-8), " + fmt(elapsed) +
             " s (limit 30)");
}

void criterion_2() {
  double worst_theta = 0.0, worst_loss = 0.0;
  for (int k = 0; k < 33; ++k) {
    const double theta = -kPi / 2.0 + kPi * k / 33.0;
    const FitResult r = fit_channel(theory_kraus(theta));
    worst_theta = std::max(worst_theta, mod_pi_distance(r.theta, theta));
    worst_loss = std::max(worst_loss, r.loss);
  }

  const Rng rng(2002, "accept-gauge");
  const double theta0 = fit_channel(theory_kraus(0.3)).theta;
  double worst_gauge = 0.0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const FitResult r =
        fit_channel(remix(theory_kraus(0.3), random_unitary(4, rng, t)));
    worst_gauge = std::max(worst_gauge, mod_pi_distance(r.theta, theta0));
  }

  report(2, "fit recovery and gauge invariance",
         worst_theta <= 1e-6 && worst_loss <= 1e-10 && worst_gauge <= 1e-8,
         "max |theta error| " + fmt(worst_theta) + " (limit 1e-6), max loss " +
             fmt(worst_loss) + " (limit 1e-10), max gauge shift " +
             fmt(worst_gauge) + " (limit 1e-8)");
}

void criterion_3() {
  double worst = 0.0;
  for (int k = 0; k <= 180; ++k) {
    const double lam = (kPi / 2.0) * k / 180.0;
    const double p1 = coin_flip_p1(lam, ScenarioTiming::NoAttack, nullptr);
    worst = std::max(worst, std::abs(p1 - std::sin(lam) * std::sin(lam)));
  }
  report(3, "coin-flip baseline on a 181-point grid", worst <= 1e-10,
         "max |p1 - sin^2| " + fmt(worst) + " (limit 1e-10)");
}

void criterion_4() {
  bool exact = true;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      const auto [p0, p1] =
          xor_probs(x1, x2, ScenarioTiming::NoAttack, nullptr);
      if (((x1 ^ x2) ? p1 : p0) != 1.0) exact = false;
    }

  const QuantumChannel ch = victim_channel(strong_attack());
  const double dm_af = xor_delta_max(ScenarioTiming::AttackerFirst, ch);
  const double dm_vf = xor_delta_max(ScenarioTiming::VictimFirst, ch);
  report(4, "XOR determinism and robustness",
         exact && dm_af <= 0.05 && dm_vf <= 0.05,
         std::string("truth table ") + (exact ? "exact" : "NOT exact") +
             "; delta_max attacker-first " + fmt(dm_af) + ", victim-first " +
             fmt(dm_vf) + " (limit 0.05)");
}

void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  const Dataset data = load_dataset(XTALK_IRIS_PATH);
  const auto [train_idx, test_idx] =
      train_test_split(static_cast<int>(data.features.rows()), 0.3, 42);
  const SqqnnModel model =
      sqqnn_train(take_rows(data.features, train_idx),
                  take_rows(data.labels, train_idx), 2, 1e-16);
  const Eigen::MatrixXd xt = take_rows(data.features, test_idx);
  const Eigen::VectorXd yt = take_rows(data.labels, test_idx);

  const double base =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::NoAttack, nullptr);
  const QuantumChannel ch = victim_channel(strong_attack());
  const double af =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::AttackerFirst, &ch);
  const double vf =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::VictimFirst, &ch);
  const double elapsed = seconds_since(start);

  report(5, "SQQNN collapse on the bundled Iris task",
         base >= 0.95 && af >= 0.4 && af <= 0.6 && vf >= base - 0.1 &&
             elapsed <= 60.0,
         "baseline " + fmt(base) + " (need >= 0.95), attacker-first " +
             fmt(af) + " (need in [0.4, 0.6]), victim-first " + fmt(vf) +
             " (need >= baseline - 0.1), " + fmt(elapsed) + " s (limit 60)");
}

void criterion_6() {
  const auto records = coupling_scan(default_scan_couplings(),
                                     default_scan_shapes(), default_attack());
  std::map<std::string, double> inf;
  for (const SweepRecord& r : records)
    inf[r.config_id] = *r.influence_norm;

  const double yx_focus =
      std::min(inf["YX-chirp"], inf["YX-cosine"]);
  const double zx_focus =
      std::max(inf["ZX-chirp"], inf["ZX-cosine"]);
  const bool clause_a = yx_focus > zx_focus;

  double other_max = 0.0;
  std::string other_argmax;
  for (const auto& [id, v] : inf)
    if (id.find("chirp") == std::string::npos &&
        id.find("cosine") == std::string::npos && v > other_max) {
      other_max = v;
      other_argmax = id;
    }
  const bool clause_b =
      std::min(inf["ZX-chirp"], inf["ZX-cosine"]) > other_max;

  double zz_worst = 0.0;
  for (PulseShape shape : default_scan_shapes()) {
    AttackConfig cfg = default_attack();
    set_link(cfg.coupling, 0, "ZZ");
    set_link(cfg.coupling, 1, "ZZ");
    cfg.pulse_q0.shape = shape;
    zz_worst = std::max(zz_worst, influence_norm(cfg));
  }
  const bool clause_c = zz_worst < 1e-4;

  report(6, "influence-scan ordering", clause_a && clause_b && clause_c,
         "YX chirp/cosine " + fmt(inf["YX-chirp"]) + "/" +
             fmt(inf["YX-cosine"]) + " vs ZX chirp/cosine " +
             fmt(inf["ZX-chirp"]) + "/" + fmt(inf["ZX-cosine"]) +
             (clause_a ? " (ordered)" : " (NOT ordered)") +
             "; largest square/drag/gaussian row " + other_argmax + " = " +
             fmt(other_max) +
             (clause_b ? " (below)" : " (NOT below ZX chirp/cosine)") +
             "; worst ZZ-ZZ influence " + fmt(zz_worst) + " (limit 1e-4)");
}

void criterion_7() {
  const auto driver = amplitude_sweep(SweepTarget::Driver_q1,
                                      default_amplitude_values(),
                                      default_attack());
  const auto catalyst = amplitude_sweep(SweepTarget::Catalyst_q0,
                                        default_amplitude_values(),
                                        default_attack());
  const auto theta_range = [](const std::vector<SweepRecord>& v) {
    double lo = *v.front().theta, hi = lo;
    for (const SweepRecord& r : v) {
      lo = std::min(lo, *r.theta);
      hi = std::max(hi, *r.theta);
    }
    return hi - lo;
  };
  const double range_driver = theta_range(driver);
  const double range_catalyst = theta_range(catalyst);
  const double loss_min_amp = *catalyst.front().loss;
  const double loss_max_amp = *catalyst.back().loss;

  const bool ranges_ok = range_driver >= 10.0 * range_catalyst;
  const bool loss_ok = loss_max_amp < loss_min_amp;
  report(7, "driver/catalyst asymmetry", ranges_ok && loss_ok,
         "theta range driver " + fmt(range_driver) + " vs catalyst " +
             fmt(range_catalyst) + (ranges_ok ? " (>= 10x)" : " (NOT >= 10x)") +
             "; catalyst loss at A0=1.0 " + fmt(loss_max_amp) +
             " vs A0=0.1 " + fmt(loss_min_amp) +
             (loss_ok ? " (decreases)" : " (does NOT decrease)"));
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  for (PulseShape shape : default_scan_shapes()) {
    const auto [vt, vl] =
        detuning_variance(shape, default_detuning_grid(), default_attack());
    const bool shape_ok = vt <= 1e-5 && vl <= 1e-5;
    ok = ok && shape_ok;
    if (!detail.empty()) detail += ", ";
    detail += pulse_shape_name(shape) + " var(theta)=" + fmt(vt) +
              " var(loss)=" + fmt(vl) + (shape_ok ? "" : " [over 1e-5]");
  }
  report(8, "detuning robustness", ok, detail);
}

void criterion_9() {
  double worst_unitarity = 0.0;
  std::vector<AttackConfig> family = {default_attack(), strong_attack()};
  for (const std::string& label : default_scan_couplings())
    for (PulseShape shape : default_scan_shapes()) {
      AttackConfig cfg = default_attack();
      set_link(cfg.coupling, 0, label);
      set_link(cfg.coupling, 1, label);
      cfg.pulse_q0.shape = shape;
      family.push_back(cfg);
    }
  for (const AttackConfig& cfg : family) {
    const CMat u = total_propagator(cfg);
    worst_unitarity = std::max(
        worst_unitarity, (u.adjoint() * u - CMat::Identity(8, 8)).norm());
  }

  const Rng rng(9009, "accept-psd");
  double worst_negativity = 0.0;
  bool clip_ok = true;
  for (std::uint64_t blk = 0; blk < 20; ++blk) {
    try {
      const QuantumChannel ch =
          reconstruct_channel(random_attack_map(rng, blk));
      worst_negativity =
          std::max(worst_negativity, -min_eigenvalue(ch.choi));
    } catch (const NumericalError&) {
      clip_ok = false;  // eigenvalue fell outside the 1e-9 clip window
    }
  }

  const Rng prng(9010, "accept-procrustes");
  bool procrustes_ok = true;
  for (std::uint64_t inst = 0; inst < 20; ++inst) {
    const double theta =
        -kPi / 2.0 + kPi * prng.uniform01(inst);
    const KrausSet th = theory_kraus(theta);
    const KrausSet exp = remix(th, random_unitary(4, prng, 100 + inst));
    const CMat u = procrustes_isometry(exp, th);
    const double at_u = fit_loss(exp, u, th);
    for (std::uint64_t r = 0; r < 1000; ++r) {
      const CMat q = random_unitary(4, prng, 10000 + 1000 * inst + r);
      if (fit_loss(exp, q, th) < at_u - 1e-12) {
        procrustes_ok = false;
        break;
      }
    }
  }

  report(9, "numerical hygiene",
         worst_unitarity <= 1e-10 && clip_ok &&
             worst_negativity <= 1e-9 && procrustes_ok,
         "max propagator unitarity defect " + fmt(worst_unitarity) +
             " (limit 1e-10); max residual Choi negativity " +
             fmt(worst_negativity) + std::string(clip_ok ? "" : " [clip window exceeded]") +
             "; Procrustes " +
             (procrustes_ok ? "never beaten by 1000 random unitaries"
                            : "BEATEN by a random unitary"));
}

void criterion_10() {
  const QuantumChannel strong = victim_channel(strong_attack());
  const DetectionReport det =
      canary_check(10000, 1, 5.0, &strong, ScenarioTiming::AttackerFirst);

  int false_flags = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed)
    if (canary_check(10000, seed, 5.0, nullptr, ScenarioTiming::NoAttack)
            .flagged)
      ++false_flags;
  const double false_rate = false_flags / 1000.0;

  bool contain_ok = true;
  std::string contain_detail;
  for (const AttackConfig& cfg : {default_attack(), strong_attack()}) {
    const QuantumChannel ch = victim_channel(cfg);
    const ContainmentReport r = containment_compare(ch, Protocol::Coin);
    const bool ok = r.post_reset_impact <= r.attacker_first_impact + 1e-12;
    contain_ok = contain_ok && ok;
    if (!contain_detail.empty()) contain_detail += ", ";
    contain_detail += "coin A=" + fmt(cfg.pulse_q0.amplitude) + " " +
                      fmt(r.post_reset_impact) + "<=" +
                      fmt(r.attacker_first_impact) + (ok ? "" : " [violated]");
  }
  {
    const Dataset data = load_dataset(XTALK_IRIS_PATH);
    const ContainmentReport r =
        containment_compare(strong, Protocol::Sqqnn, &data.features,
                            &data.labels, 2, 1e-16, 0.3, 42);
    const bool ok = r.post_reset_impact <= r.attacker_first_impact + 1e-12;
    contain_ok = contain_ok && ok;
    contain_detail += ", sqqnn A=1 " + fmt(r.post_reset_impact) + "<=" +
                      fmt(r.attacker_first_impact) + (ok ? "" : " [violated]");
  }

  report(10, "defense detection and containment",
         det.flagged && false_rate <= 0.002 && contain_ok,
         std::string("canary on A=1.0 attack ") +
             (det.flagged ? "flagged" : "NOT flagged") + " (z=" +
             fmt(det.z_score) + ", p_hat=" + fmt(det.p_hat) +
             "); false-flag rate " + fmt(false_rate) +
             " (limit 0.002); containment: " + contain_detail);
}

std::string run_campaign() {
  const std::string cfg_echo = "{}";
  std::string out;
  out += scan_csv(coupling_scan(default_scan_couplings(),
                                default_scan_shapes(), default_attack()),
                  cfg_echo);
  out += sweep_csv(amplitude_sweep(SweepTarget::Driver_q1,
                                   default_amplitude_values(),
                                   default_attack()),
                   cfg_echo);
  out += sweep_csv(amplitude_sweep(SweepTarget::Catalyst_q0,
                                   default_amplitude_values(),
                                   default_attack()),
                   cfg_echo);
  for (PulseShape shape : default_scan_shapes())
    out += sweep_csv(detuning_sweep(shape, default_detuning_grid(),
                                    default_attack()),
                     cfg_echo);
  return out;
}

void criterion_11() {
  const auto start = std::chrono::steady_clock::now();
  const std::string first = run_campaign();
  const double elapsed = seconds_since(start);
  const std::string second = run_campaign();
  report(11, "determinism and campaign runtime",
         first == second && elapsed < 300.0,
         std::string("repeat runs ") +
             (first == second ? "byte-identical" : "DIFFER") +
             "; campaign took " + fmt(elapsed) + " s (limit 300)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria passed\n", 11 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
