#pragma once

#include "xtalk/dynamics.hpp"
#include "xtalk/fit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xtalk {

// One row of a scan or sweep campaign. Carries the influence norm and/or a
// (theta, loss) fit, plus the fit convergence flag for sweep CSV output.
struct SweepRecord {
  std::string config_id;
  std::string swept_name;
  double swept_value = 0.0;
  std::optional<double> influence_norm;
  std::optional<double> theta;
  std::optional<double> loss;
  bool converged = true;
};

// Full pipeline: victim channel -> chi -> Kraus -> model fit.
FitResult fit_attack(const AttackConfig& cfg);

// L2 distance between the victim's computational-basis distribution under
// cfg and under the identical config with the q0 amplitude set to 0
// (couplings and the q1 drive retained), starting from |000>.
double influence_norm(const AttackConfig& cfg);

// One record per (coupling, shape): the coupling label is applied to both
// links, the shape to the q0 pulse (q1 keeps the base reference pulse).
// Sorted by influence descending, ties broken lexicographically by
// (coupling, shape); swept_value is the resulting rank.
std::vector<SweepRecord> coupling_scan(const std::vector<std::string>& couplings,
                                       const std::vector<PulseShape>& shapes,
                                       const AttackConfig& base);

enum class SweepTarget { Catalyst_q0, Driver_q1 };

SweepTarget parse_sweep_target(std::string_view name);
std::string sweep_target_name(SweepTarget t);

// Fit (theta, loss) at each amplitude of the chosen drive; `values` must be
// strictly ascending. Fit non-convergence flags the record and continues.
std::vector<SweepRecord> amplitude_sweep(SweepTarget target,
                                         const std::vector<double>& values,
                                         const AttackConfig& base);

// Fit (theta, loss) with the given shape and detuning applied to both
// pulses, one record per delta (strictly ascending).
std::vector<SweepRecord> detuning_sweep(PulseShape shape,
                                        const std::vector<double>& deltas,
                                        const AttackConfig& base);

// Population variance of fitted theta and loss over the detuning grid.
// Requires at least 2 deltas; the grid need not be ascending and may
// contain duplicates (identical deltas give variance 0).
std::pair<double, double> detuning_variance(PulseShape shape,
                                            const std::vector<double>& deltas,
                                            const AttackConfig& base);

std::vector<double> linspace(double a, double b, int n);

// Documented default campaign grids.
const std::vector<std::string>& default_scan_couplings();   // {YX, ZX}
const std::vector<PulseShape>& default_scan_shapes();       // all five
const std::vector<double>& default_amplitude_values();      // 0.1 .. 1.0
const std::vector<double>& default_detuning_grid();         // 21 pts [0, 4pi]

}  // namespace xtalk
