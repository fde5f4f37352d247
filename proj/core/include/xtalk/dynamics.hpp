#pragma once

#include "xtalk/channel.hpp"
#include "xtalk/pulse.hpp"

#include <string>
#include <string_view>

namespace xtalk {

enum class PauliAxis { X = 1, Y = 2, Z = 3 };

PauliAxis parse_pauli_axis(char c);
char pauli_axis_name(PauliAxis a);

// Static two-body couplings along the q0-q1-q2 chain. Each link applies
// sigma_a on its lower-indexed qubit and sigma_b on the higher one.
struct CouplingSpec {
  PauliAxis pauli_01_a = PauliAxis::Z;  // on q0
  PauliAxis pauli_01_b = PauliAxis::X;  // on q1
  PauliAxis pauli_12_a = PauliAxis::Z;  // on q1
  PauliAxis pauli_12_b = PauliAxis::X;  // on q2
  double j01 = 0.5;
  double j12 = 0.5;
};

// Parse a two-letter label like "ZX" into one link's Pauli pair.
void set_link(CouplingSpec& c, int link, std::string_view label);
std::string link_label(const CouplingSpec& c, int link);

enum class AuxState { S00, S01, S10, S11, PlusPlus };

AuxState parse_aux_state(std::string_view name);
std::string aux_state_name(AuxState s);

// Full description of one attack window: couplings, the two adversarial
// drive pulses, the adversary register preparation, and integrator
// resolution over the normalized window t in [0,1].
struct AttackConfig {
  CouplingSpec coupling;
  PulseSpec pulse_q0;
  PulseSpec pulse_q1;
  AuxState aux_state = AuxState::S00;
  int time_steps = 50;
  int substeps_per_step = 4;
};

void validate_config(const AttackConfig& cfg);

// H_c = j01 (sigma_a (x) sigma_b (x) I) + j12 (I (x) sigma_a (x) sigma_b).
CMat coupling_hamiltonian(const CouplingSpec& c);

// A0 f0(t) (sigma_x (x) I (x) I) + A1 f1(t) (I (x) sigma_x (x) I), where
// the eval_pulse value carries the amplitude.
CMat drive_hamiltonian(const AttackConfig& cfg, double t);

CMat hamiltonian(const AttackConfig& cfg, double t);

// Ordered product of midpoint-rule sub-propagators exp(-i H(t_mid) dt)
// over time_steps * substeps_per_step uniform sub-intervals of [0,1].
CMat total_propagator(const AttackConfig& cfg);

// rho_final = U rho0 U^dag. Validates rho0 (dim 8 density invariants).
CMat evolve(const AttackConfig& cfg, const CMat& rho0);

// 4x4 density matrix of the adversary register preparation.
CMat aux_density(AuxState s);

// Action of the attack window on the victim qubit:
// rho_v -> Tr_{q0,q1}[ U (tau_aux (x) rho_v) U^dag ].
CMat apply_attack(const AttackConfig& cfg, const CMat& rho_v);

// The same map materialized as a QuantumChannel by propagating the four
// tomography inputs.
QuantumChannel victim_channel(const AttackConfig& cfg);

}  // namespace xtalk
