#include "xtalk/rng.hpp"

#include <cmath>

namespace xtalk {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream_name)
    : seed_(seed), stream_(fnv1a(stream_name)) {}

std::uint64_t Rng::bits(std::uint64_t i) const {
  return mix(seed_ + stream_ + (i + 1) * 0x9E3779B97F4A7C15ULL);
}

double Rng::uniform01(std::uint64_t i) const {
  return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
}

double Rng::gaussian(std::uint64_t i) const {
  double u1 = uniform01(2 * i);
  const double u2 = uniform01(2 * i + 1);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

CMat random_unitary(int dim, const Rng& rng, std::uint64_t block) {
  const std::uint64_t base = block * static_cast<std::uint64_t>(2 * dim * dim);
  CMat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const std::uint64_t k = base + 2 * (r * dim + c);
      g(r, c) = complexd(rng.gaussian(k), rng.gaussian(k + 1));
    }
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const complexd d = r(c, c);
    const double a = std::abs(d);
    q.col(c) *= (a > 0.0) ? d / a : complexd(1.0, 0.0);
  }
  return q;
}

CMat random_density2(const Rng& rng, std::uint64_t block) {
  const std::uint64_t base = 1000000 + block * 16;
  CMat g(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const std::uint64_t k = base + 2 * (r * 2 + c);
      g(r, c) = complexd(rng.gaussian(k), rng.gaussian(k + 1));
    }
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace xtalk
