#include "xtalk/pulse.hpp"

#include "xtalk/linalg.hpp"

#include <cmath>

namespace xtalk {

void validate_pulse(const PulseSpec& p) {
  if (!(p.amplitude >= 0.0 && p.amplitude <= kAmplitudeMax))
    throw ValidationError("pulse: amplitude outside [0, " +
                          std::to_string(kAmplitudeMax) + "]");
  if ((p.shape == PulseShape::Gaussian || p.shape == PulseShape::Drag) &&
      !(p.sigma > 0.0))
    throw ValidationError("pulse: sigma must be > 0 for gaussian/drag");
  if (!std::isfinite(p.detuning) || !std::isfinite(p.chirp_rate) ||
      !std::isfinite(p.drag_alpha))
    throw ValidationError("pulse: non-finite parameter");
}

double eval_pulse(const PulseSpec& p, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw ValidationError("eval_pulse: t outside [0, 1]");
  const double a = p.amplitude;
  switch (p.shape) {
    case PulseShape::Cosine:
      return a * std::cos(p.detuning * t);
    case PulseShape::Gaussian: {
      const double u = t - 0.5;
      return a * std::exp(-u * u / (2.0 * p.sigma * p.sigma));
    }
    case PulseShape::Square:
      return (t >= 0.3 && t <= 0.7) ? a : 0.0;
    case PulseShape::Chirp:
      return a * std::cos((p.detuning + p.chirp_rate * t) * t);
    case PulseShape::Drag: {
      const double u = t - 0.5;
      const double g = std::exp(-u * u / (2.0 * p.sigma * p.sigma));
      return a * g * (1.0 - p.drag_alpha * u / (p.sigma * p.sigma));
    }
  }
  throw ValidationError("eval_pulse: unknown shape");
}

std::string pulse_shape_name(PulseShape s) {
  switch (s) {
    case PulseShape::Cosine: return "cosine";
    case PulseShape::Gaussian: return "gaussian";
    case PulseShape::Square: return "square";
    case PulseShape::Chirp: return "chirp";
    case PulseShape::Drag: return "drag";
  }
  return "unknown";
}

PulseShape parse_pulse_shape(std::string_view name) {
  if (name == "cosine") return PulseShape::Cosine;
  if (name == "gaussian") return PulseShape::Gaussian;
  if (name == "square") return PulseShape::Square;
  if (name == "chirp") return PulseShape::Chirp;
  if (name == "drag") return PulseShape::Drag;
  throw ValidationError("unknown pulse shape: " + std::string(name));
}

}  // namespace xtalk
