#include "xtalk/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace xtalk {

FitResult fit_attack(const AttackConfig& cfg) {
  const QuantumChannel ch = victim_channel(cfg);
  return fit_channel(kraus_from_chi(chi_from_choi(ch)));
}

double influence_norm(const AttackConfig& cfg) {
  validate_config(cfg);
  CMat rho0 = CMat::Zero(8, 8);
  rho0(0, 0) = 1.0;

  const auto victim_populations = [&](const AttackConfig& c) {
    const CMat rho_v = partial_trace_keep_last(evolve(c, rho0));
    return std::pair<double, double>(rho_v(0, 0).real(), rho_v(1, 1).real());
  };

  AttackConfig baseline = cfg;
  baseline.pulse_q0.amplitude = 0.0;
  const auto [p0, p1] = victim_populations(cfg);
  const auto [b0, b1] = victim_populations(baseline);
  return std::sqrt((p0 - b0) * (p0 - b0) + (p1 - b1) * (p1 - b1));
}

SweepTarget parse_sweep_target(std::string_view name) {
  if (name == "catalyst") return SweepTarget::Catalyst_q0;
  if (name == "driver") return SweepTarget::Driver_q1;
  throw ValidationError("unknown sweep target: " + std::string(name) +
                        " (expected catalyst or driver)");
}

std::string sweep_target_name(SweepTarget t) {
  return t == SweepTarget::Catalyst_q0 ? "catalyst" : "driver";
}

std::vector<SweepRecord> coupling_scan(const std::vector<std::string>& couplings,
                                       const std::vector<PulseShape>& shapes,
                                       const AttackConfig& base) {
  if (couplings.empty() || shapes.empty())
    throw ValidationError("coupling_scan: empty coupling or shape list");

  struct Row {
    std::string coupling;
    std::string shape;
    double influence;
  };
  std::vector<Row> rows;
  for (const std::string& label : couplings)
    for (PulseShape shape : shapes) {
      AttackConfig cfg = base;
      set_link(cfg.coupling, 0, label);
      set_link(cfg.coupling, 1, label);
      cfg.pulse_q0.shape = shape;
      rows.push_back({label, pulse_shape_name(shape), influence_norm(cfg)});
    }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.influence != b.influence) return a.influence > b.influence;
    if (a.coupling != b.coupling) return a.coupling < b.coupling;
    return a.shape < b.shape;
  });

  std::vector<SweepRecord> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SweepRecord r;
    r.config_id = rows[i].coupling + "-" + rows[i].shape;
    r.swept_name = "rank";
    r.swept_value = static_cast<double>(i);
    r.influence_norm = rows[i].influence;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

void require_strictly_ascending(const std::vector<double>& v,
                                const std::string& what) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1]))
      throw ValidationError(what + ": values must be strictly ascending");
}

}  // namespace

std::vector<SweepRecord> amplitude_sweep(SweepTarget target,
                                         const std::vector<double>& values,
                                         const AttackConfig& base) {
  if (values.empty())
    throw ValidationError("amplitude_sweep: empty value list");
  require_strictly_ascending(values, "amplitude_sweep");

  const std::string name =
      target == SweepTarget::Catalyst_q0 ? "A0" : "A1";
  std::vector<SweepRecord> out;
  for (double v : values) {
    AttackConfig cfg = base;
    (target == SweepTarget::Catalyst_q0 ? cfg.pulse_q0 : cfg.pulse_q1)
        .amplitude = v;
    const FitResult fit = fit_attack(cfg);
    SweepRecord r;
    r.config_id = sweep_target_name(target);
    r.swept_name = name;
    r.swept_value = v;
    r.theta = fit.theta;
    r.loss = fit.loss;
    r.converged = fit.converged;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

FitResult fit_at_detuning(PulseShape shape, double delta,
                          const AttackConfig& base) {
  AttackConfig cfg = base;
  cfg.pulse_q0.shape = shape;
  cfg.pulse_q1.shape = shape;
  cfg.pulse_q0.detuning = delta;
  cfg.pulse_q1.detuning = delta;
  return fit_attack(cfg);
}

}  // namespace

std::vector<SweepRecord> detuning_sweep(PulseShape shape,
                                        const std::vector<double>& deltas,
                                        const AttackConfig& base) {
  if (deltas.empty()) throw ValidationError("detuning_sweep: empty delta list");
  require_strictly_ascending(deltas, "detuning_sweep");

  std::vector<SweepRecord> out;
  for (double d : deltas) {
    const FitResult fit = fit_at_detuning(shape, d, base);
    SweepRecord r;
    r.config_id = pulse_shape_name(shape);
    r.swept_name = "delta";
    r.swept_value = d;
    r.theta = fit.theta;
    r.loss = fit.loss;
    r.converged = fit.converged;
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<double, double> detuning_variance(PulseShape shape,
                                            const std::vector<double>& deltas,
                                            const AttackConfig& base) {
  if (deltas.size() < 2)
    throw ValidationError("detuning_variance: need at least 2 deltas");

  std::vector<double> thetas, losses;
  for (double d : deltas) {
    const FitResult fit = fit_at_detuning(shape, d, base);
    thetas.push_back(fit.theta);
    losses.push_back(fit.loss);
  }

  const auto population_variance = [](const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    return var / static_cast<double>(x.size());
  };

  return {population_variance(thetas), population_variance(losses)};
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw ValidationError("linspace: need at least 2 points");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  return v;
}

const std::vector<std::string>& default_scan_couplings() {
  static const std::vector<std::string> v = {"YX", "ZX"};
  return v;
}

const std::vector<PulseShape>& default_scan_shapes() {
  static const std::vector<PulseShape> v = {
      PulseShape::Chirp, PulseShape::Cosine, PulseShape::Square,
      PulseShape::Drag, PulseShape::Gaussian};
  return v;
}

const std::vector<double>& default_amplitude_values() {
  static const std::vector<double> v = [] {
    std::vector<double> a;
    for (int i = 1; i <= 10; ++i) a.push_back(0.1 * i);
    return a;
  }();
  return v;
}

const std::vector<double>& default_detuning_grid() {
  static const std::vector<double> v = linspace(0.0, 4.0 * kPi, 21);
  return v;
}

}  // namespace xtalk
