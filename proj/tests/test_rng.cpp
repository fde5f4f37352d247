#include "xtalk/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace xtalk;

TEST_CASE("identical seed and stream reproduce the sequence") {
  const Rng a(42, "alpha");
  const Rng b(42, "alpha");
  for (std::uint64_t i = 0; i < 16; ++i) {
    CHECK(a.bits(i) == b.bits(i));
    CHECK(a.uniform01(i) == b.uniform01(i));
    CHECK(a.gaussian(i) == b.gaussian(i));
  }
}

TEST_CASE("different streams decorrelate") {
  const Rng a(42, "alpha");
  const Rng b(42, "beta");
  int same = 0;
  for (std::uint64_t i = 0; i < 64; ++i)
    if (a.bits(i) == b.bits(i)) ++same;
  CHECK(same == 0);
}

TEST_CASE("draws are pure functions of the counter") {
  const Rng rng(7, "counter");
  const std::uint64_t later = rng.bits(100);
  const std::uint64_t early = rng.bits(3);
  CHECK(rng.bits(100) == later);
  CHECK(rng.bits(3) == early);
}

TEST_CASE("uniform01 stays in [0, 1)") {
  const Rng rng(1, "u01");
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const double u = rng.uniform01(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gaussian moments are plausible") {
  const Rng rng(2024, "gauss");
  const int n = 20000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian(static_cast<std::uint64_t>(i));
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) <= 0.05);
  CHECK(std::abs(var - 1.0) <= 0.1);
}

TEST_CASE("random_unitary is unitary and block-dependent") {
  const Rng rng(5, "runit");
  const CMat u = random_unitary(8, rng, 0);
  CHECK((u.adjoint() * u - CMat::Identity(8, 8)).norm() <= 1e-12);
  const CMat v = random_unitary(8, rng, 1);
  CHECK((u - v).norm() > 1e-3);
  CHECK(approx_equal(u, random_unitary(8, rng, 0), 0.0));
}

TEST_CASE("random_density2 is a valid state") {
  const Rng rng(6, "rdens");
  for (std::uint64_t b = 0; b < 10; ++b) {
    const CMat rho = random_density2(rng, b);
    CHECK(is_hermitian(rho, 1e-12));
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
    CHECK(min_eigenvalue(rho) >= -1e-12);
  }
}

TEST_CASE("generator name is pinned") {
  CHECK(std::string(kRngName) == "splitmix64-v1");
}
