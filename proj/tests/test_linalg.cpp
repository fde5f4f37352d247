#include "xtalk/linalg.hpp"
#include "xtalk/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace xtalk;

namespace {

CMat random_complex(int rows, int cols, const Rng& rng, std::uint64_t base) {
  CMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const std::uint64_t k = base + 2 * (r * cols + c);
      m(r, c) = complexd(rng.gaussian(k), rng.gaussian(k + 1));
    }
  return m;
}

CMat random_hermitian(int dim, const Rng& rng, std::uint64_t base) {
  const CMat g = random_complex(dim, dim, rng, base);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("kron identity case") {
  CHECK(approx_equal(kron(pauli(0), pauli(0)), CMat::Identity(4, 4), 0.0));
}

TEST_CASE("kron sigma_z x sigma_x entries") {
  const CMat m = kron(pauli(3), pauli(1));
  CHECK(m(0, 1) == complexd(1.0, 0.0));
  CHECK(m(1, 0) == complexd(1.0, 0.0));
  CHECK(m(2, 3) == complexd(-1.0, 0.0));
  CHECK(m(3, 2) == complexd(-1.0, 0.0));
  CHECK(m(0, 0) == complexd(0.0, 0.0));
}

TEST_CASE("kron against the element index formula") {
  const Rng rng(7, "kron");
  const CMat a = random_complex(2, 2, rng, 0);
  const CMat b = random_complex(2, 2, rng, 100);
  const CMat m = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(std::abs(m(i * 2 + k, j * 2 + l) - a(i, j) * b(k, l)) == 0.0);
}

TEST_CASE("kron associativity on random triples") {
  const Rng rng(11, "kron3");
  for (int trial = 0; trial < 5; ++trial) {
    const CMat a = random_complex(2, 2, rng, 1000 * trial);
    const CMat b = random_complex(2, 2, rng, 1000 * trial + 100);
    const CMat c = random_complex(2, 2, rng, 1000 * trial + 200);
    CHECK(approx_equal(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14));
  }
}

TEST_CASE("partial trace of |000><000|") {
  CMat rho = CMat::Zero(8, 8);
  rho(0, 0) = 1.0;
  CMat expect = CMat::Zero(2, 2);
  expect(0, 0) = 1.0;
  CHECK(approx_equal(partial_trace_keep_last(rho), expect, 1e-15));
}

TEST_CASE("partial trace of a product state returns the victim factor") {
  const Rng rng(3, "pt");
  for (int trial = 0; trial < 5; ++trial) {
    const CMat a = random_density2(rng, 3 * trial);
    const CMat b = random_density2(rng, 3 * trial + 1);
    const CMat v = random_density2(rng, 3 * trial + 2);
    const CMat rho = kron(kron(a, b), v);
    CHECK(approx_equal(partial_trace_keep_last(rho), v, 1e-12));
    CHECK(std::abs(partial_trace_keep_last(rho).trace() - rho.trace()) <=
          1e-12);
  }
}

TEST_CASE("partial trace of GHZ is maximally mixed") {
  CVec ghz = CVec::Zero(8);
  ghz(0) = 1.0 / std::sqrt(2.0);
  ghz(7) = 1.0 / std::sqrt(2.0);
  const CMat red = partial_trace_keep_last(ghz * ghz.adjoint());
  CHECK(std::abs(red(0, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(red(1, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(red(0, 1)) <= 1e-15);
}

TEST_CASE("partial trace linearity") {
  const Rng rng(5, "ptlin");
  const CMat r1 = random_complex(8, 8, rng, 0);
  const CMat r2 = random_complex(8, 8, rng, 200);
  const CMat lhs = partial_trace_keep_last(0.3 * r1 + 0.7 * r2);
  const CMat rhs =
      0.3 * partial_trace_keep_last(r1) + 0.7 * partial_trace_keep_last(r2);
  CHECK(approx_equal(lhs, rhs, 1e-12));
}

TEST_CASE("partial trace rejects wrong dimension") {
  CHECK_THROWS_AS(partial_trace_keep_last(CMat::Identity(4, 4)),
                  ValidationError);
}

TEST_CASE("expm of zero is the identity") {
  CHECK(approx_equal(expm_hermitian(CMat::Zero(4, 4), 2.7),
                     CMat::Identity(4, 4), 1e-15));
}

TEST_CASE("expm of sigma_z at tau = pi") {
  const CMat u = expm_hermitian(pauli(3), kPi);
  CHECK(approx_equal(u, -CMat::Identity(2, 2), 1e-14));
}

TEST_CASE("expm agrees with a truncated Taylor series") {
  const Rng rng(17, "taylor");
  for (int trial = 0; trial < 3; ++trial) {
    const CMat h = random_hermitian(8, rng, 500 * trial);
    const double tau = 0.1;
    CMat taylor = CMat::Identity(8, 8);
    CMat term = CMat::Identity(8, 8);
    const CMat step = complexd(0.0, -tau) * h;
    for (int k = 1; k <= 30; ++k) {
      term = term * step / static_cast<double>(k);
      taylor += term;
    }
    CHECK((expm_hermitian(h, tau) - taylor).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("expm outputs are unitary") {
  const Rng rng(23, "uni");
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMat h = random_hermitian(8, rng, 500 * trial);
    const CMat u = expm_hermitian(h, 0.37);
    worst = std::max(worst,
                     (u.adjoint() * u - CMat::Identity(8, 8)).norm());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("expm rejects non-Hermitian input") {
  CMat m = CMat::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(expm_hermitian(m, 1.0), ValidationError);
}

TEST_CASE("validate_density accepts valid and rejects invalid states") {
  const Rng rng(29, "vd");
  CHECK_NOTHROW(validate_density(random_density2(rng, 0), "test"));

  CMat not_trace_one = 2.0 * random_density2(rng, 1);
  CHECK_THROWS_AS(validate_density(not_trace_one, "test"), ValidationError);

  CMat not_hermitian = random_density2(rng, 2);
  not_hermitian(0, 1) += complexd(0.1, 0.0);
  CHECK_THROWS_AS(validate_density(not_hermitian, "test"), ValidationError);

  CMat negative(2, 2);
  negative << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(validate_density(negative, "test"), ValidationError);
}

TEST_CASE("validate_unitary") {
  CHECK_NOTHROW(validate_unitary(pauli(1), 1e-12, "test"));
  CHECK_THROWS_AS(validate_unitary(0.5 * pauli(1), 1e-10, "test"),
                  ValidationError);
}
