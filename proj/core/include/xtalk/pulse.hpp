#pragma once

#include <string>
#include <string_view>

namespace xtalk {

enum class PulseShape { Cosine, Gaussian, Square, Chirp, Drag };

// One adversarial drive pulse on the normalized window t in [0,1].
// Amplitudes and rates are angular frequencies (hbar = 1).
struct PulseSpec {
  PulseShape shape = PulseShape::Cosine;
  double amplitude = 0.5;    // A, in [0, kAmplitudeMax]
  double detuning = 5.0;     // delta
  double chirp_rate = 10.0;  // c
  double drag_alpha = 0.5;   // alpha (dimensionless)
  double sigma = 0.15;       // width, > 0 for Gaussian/Drag
};

inline constexpr double kAmplitudeMax = 1.0;

// Throws ValidationError on out-of-range amplitude or non-positive sigma
// for shapes that use it.
void validate_pulse(const PulseSpec& p);

// Full drive value f(t) with the amplitude folded in:
//   Cosine   A cos(delta t)
//   Gaussian A exp(-(t-0.5)^2 / (2 sigma^2))
//   Square   A on [0.3, 0.7] (inclusive), else 0
//   Chirp    A cos((delta + c t) t)
//   Drag     A G(t) (1 - alpha (t-0.5)/sigma^2), G = gaussian envelope
// Throws ValidationError if t is outside [0, 1].
double eval_pulse(const PulseSpec& p, double t);

std::string pulse_shape_name(PulseShape s);
PulseShape parse_pulse_shape(std::string_view name);

}  // namespace xtalk
