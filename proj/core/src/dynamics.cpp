#include "xtalk/dynamics.hpp"

#include <cmath>

namespace xtalk {

PauliAxis parse_pauli_axis(char c) {
  switch (c) {
    case 'X': case 'x': return PauliAxis::X;
    case 'Y': case 'y': return PauliAxis::Y;
    case 'Z': case 'z': return PauliAxis::Z;
  }
  throw ValidationError(std::string("unknown Pauli label: ") + c);
}

char pauli_axis_name(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

void set_link(CouplingSpec& c, int link, std::string_view label) {
  if (label.size() != 2)
    throw ValidationError("coupling label must be two Pauli letters, got: " +
                          std::string(label));
  const PauliAxis a = parse_pauli_axis(label[0]);
  const PauliAxis b = parse_pauli_axis(label[1]);
  if (link == 0) {
    c.pauli_01_a = a;
    c.pauli_01_b = b;
  } else if (link == 1) {
    c.pauli_12_a = a;
    c.pauli_12_b = b;
  } else {
    throw ValidationError("coupling link index must be 0 or 1");
  }
}

std::string link_label(const CouplingSpec& c, int link) {
  std::string s;
  if (link == 0) {
    s += pauli_axis_name(c.pauli_01_a);
    s += pauli_axis_name(c.pauli_01_b);
  } else {
    s += pauli_axis_name(c.pauli_12_a);
    s += pauli_axis_name(c.pauli_12_b);
  }
  return s;
}

AuxState parse_aux_state(std::string_view name) {
  if (name == "00") return AuxState::S00;
  if (name == "01") return AuxState::S01;
  if (name == "10") return AuxState::S10;
  if (name == "11") return AuxState::S11;
  if (name == "++") return AuxState::PlusPlus;
  throw ValidationError("unknown aux state: " + std::string(name) +
                        " (expected 00, 01, 10, 11 or ++)");
}

std::string aux_state_name(AuxState s) {
  switch (s) {
    case AuxState::S00: return "00";
    case AuxState::S01: return "01";
    case AuxState::S10: return "10";
    case AuxState::S11: return "11";
    case AuxState::PlusPlus: return "++";
  }
  return "?";
}

void validate_config(const AttackConfig& cfg) {
  if (cfg.time_steps < 1)
    throw ValidationError("config: time_steps must be >= 1");
  if (cfg.substeps_per_step < 1)
    throw ValidationError("config: substeps_per_step must be >= 1");
  if (!std::isfinite(cfg.coupling.j01) || !std::isfinite(cfg.coupling.j12))
    throw ValidationError("config: coupling strengths must be finite");
  validate_pulse(cfg.pulse_q0);
  validate_pulse(cfg.pulse_q1);
}

CMat coupling_hamiltonian(const CouplingSpec& c) {
  const CMat& id = pauli(0);
  const CMat h01 = kron(kron(pauli(static_cast<int>(c.pauli_01_a)),
                             pauli(static_cast<int>(c.pauli_01_b))),
                        id);
  const CMat h12 = kron(kron(id, pauli(static_cast<int>(c.pauli_12_a))),
                        pauli(static_cast<int>(c.pauli_12_b)));
  return c.j01 * h01 + c.j12 * h12;
}

CMat drive_hamiltonian(const AttackConfig& cfg, double t) {
  const CMat& id = pauli(0);
  const CMat& sx = pauli(1);
  return eval_pulse(cfg.pulse_q0, t) * kron(kron(sx, id), id) +
         eval_pulse(cfg.pulse_q1, t) * kron(kron(id, sx), id);
}

CMat hamiltonian(const AttackConfig& cfg, double t) {
  return coupling_hamiltonian(cfg.coupling) + drive_hamiltonian(cfg, t);
}

CMat total_propagator(const AttackConfig& cfg) {
  validate_config(cfg);
  const long n =
      static_cast<long>(cfg.time_steps) * cfg.substeps_per_step;
  const double dt = 1.0 / static_cast<double>(n);
  CMat u = CMat::Identity(8, 8);
  for (long k = 0; k < n; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    u = expm_hermitian(hamiltonian(cfg, t_mid), dt) * u;
  }
  return u;
}

CMat evolve(const AttackConfig& cfg, const CMat& rho0) {
  if (rho0.rows() != 8 || rho0.cols() != 8)
    throw ValidationError("evolve: expected an 8x8 density matrix");
  validate_density(rho0, "evolve");
  const CMat u = total_propagator(cfg);
  return u * rho0 * u.adjoint();
}

CMat aux_density(AuxState s) {
  if (s == AuxState::PlusPlus) {
    CVec v = CVec::Constant(4, complexd(0.5, 0.0));
    return v * v.adjoint();
  }
  int idx = 0;
  switch (s) {
    case AuxState::S00: idx = 0; break;
    case AuxState::S01: idx = 1; break;
    case AuxState::S10: idx = 2; break;
    case AuxState::S11: idx = 3; break;
    default: break;
  }
  CMat rho = CMat::Zero(4, 4);
  rho(idx, idx) = 1.0;
  return rho;
}

CMat apply_attack(const AttackConfig& cfg, const CMat& rho_v) {
  const CMat u = total_propagator(cfg);
  const CMat rho0 = kron(aux_density(cfg.aux_state), rho_v);
  return partial_trace_keep_last(u * rho0 * u.adjoint());
}

QuantumChannel victim_channel(const AttackConfig& cfg) {
  const CMat u = total_propagator(cfg);
  const CMat aux = aux_density(cfg.aux_state);
  return reconstruct_channel([&](const CMat& rho_v) {
    return partial_trace_keep_last(u * kron(aux, rho_v) * u.adjoint());
  });
}

}  // namespace xtalk
