#pragma once

#include "xtalk/linalg.hpp"

#include <cstdint>
#include <string_view>

namespace xtalk {

// Generator identifier recorded in every output that consumed randomness.
inline constexpr const char* kRngName = "splitmix64-v1";

// Counter-based SplitMix64. Draw i of a (seed, stream) pair is a pure
// function of (seed, stream, i): streams are splittable by name and every
// draw is replayable without carried state.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream_name);

  std::uint64_t bits(std::uint64_t i) const;
  double uniform01(std::uint64_t i) const;  // in [0, 1)
  double gaussian(std::uint64_t i) const;   // standard normal (Box-Muller)

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Deterministic Haar-like random unitary: QR of a complex Gaussian matrix
// with the R-diagonal phase fix. `block` selects independent draws.
CMat random_unitary(int dim, const Rng& rng, std::uint64_t block);

// Random 2x2 density matrix (normalized Wishart-like), deterministic.
CMat random_density2(const Rng& rng, std::uint64_t block);

}  // namespace xtalk
