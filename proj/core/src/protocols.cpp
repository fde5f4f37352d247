#include "xtalk/protocols.hpp"

#include "xtalk/rng.hpp"

#include <algorithm>
#include <cmath>

namespace xtalk {

namespace {

CMat rho_zero() {
  CMat r = CMat::Zero(2, 2);
  r(0, 0) = 1.0;
  return r;
}

CMat gate_h() {
  const double c = 1.0 / std::sqrt(2.0);
  CMat h(2, 2);
  h << c, c, c, -c;
  return h;
}

CMat gate_rz(double phi) {
  CMat r = CMat::Zero(2, 2);
  r(0, 0) = std::exp(complexd(0.0, -phi / 2.0));
  r(1, 1) = std::exp(complexd(0.0, phi / 2.0));
  return r;
}

CMat gate_rx(double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  CMat r(2, 2);
  r << complexd(c, 0.0), complexd(0.0, -s), complexd(0.0, -s),
      complexd(c, 0.0);
  return r;
}

CMat gate_ry(double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  CMat r(2, 2);
  r << c, -s, s, c;
  return r;
}

Eigen::MatrixXd poly_features(const Eigen::MatrixXd& x, int degree) {
  const Eigen::Index n = x.rows(), p = x.cols();
  Eigen::MatrixXd out(n, 1 + degree * p);
  out.col(0).setOnes();
  for (int k = 1; k <= degree; ++k)
    for (Eigen::Index j = 0; j < p; ++j)
      out.col(1 + (k - 1) * p + j) = x.col(j).array().pow(k);
  return out;
}

}  // namespace

ScenarioTiming parse_timing(std::string_view name) {
  if (name == "attacker-first") return ScenarioTiming::AttackerFirst;
  if (name == "victim-first") return ScenarioTiming::VictimFirst;
  if (name == "no-attack") return ScenarioTiming::NoAttack;
  throw ValidationError("unknown timing: " + std::string(name) +
                        " (expected attacker-first, victim-first, no-attack)");
}

std::string timing_name(ScenarioTiming t) {
  switch (t) {
    case ScenarioTiming::AttackerFirst: return "attacker-first";
    case ScenarioTiming::VictimFirst: return "victim-first";
    case ScenarioTiming::NoAttack: return "no-attack";
  }
  return "?";
}

CMat compose_scenario(ScenarioTiming timing, const CMat& victim_unitary,
                      const QuantumChannel* channel) {
  validate_unitary(victim_unitary, 1e-10, "compose_scenario victim gate");
  const CMat rho0 = rho_zero();
  CMat rho;
  if (timing == ScenarioTiming::NoAttack || channel == nullptr) {
    rho = victim_unitary * rho0 * victim_unitary.adjoint();
  } else if (timing == ScenarioTiming::AttackerFirst) {
    rho = victim_unitary * channel_apply(*channel, rho0) *
          victim_unitary.adjoint();
  } else {
    rho = channel_apply(*channel,
                        victim_unitary * rho0 * victim_unitary.adjoint());
  }
  const double tr = rho.trace().real();
  if (tr > 0.0) rho /= tr;
  return rho;
}

double coin_flip_p1(double lambda, ScenarioTiming timing,
                    const QuantumChannel* channel) {
  const double c = std::cos(lambda), s = std::sin(lambda);
  CMat v(2, 2);
  v << c, -s, s, c;
  const CMat rho = compose_scenario(timing, v, channel);
  return rho(1, 1).real();
}

std::pair<double, double> xor_probs(int x1, int x2, ScenarioTiming timing,
                                    const QuantumChannel* channel) {
  if ((x1 != 0 && x1 != 1) || (x2 != 0 && x2 != 1))
    throw ValidationError("xor_probs: inputs must be bits");
  const CMat u = gate_rx((2 * x2 - 1) * kPi / 2.0) *
                 gate_rz((2 * x1 - 1) * kPi / 2.0) * gate_h();
  const CMat rho = compose_scenario(timing, u, channel);
  return {rho(0, 0).real(), rho(1, 1).real()};
}

double xor_delta_max(ScenarioTiming timing, const QuantumChannel& channel) {
  double worst = 1.0;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      const auto [p0, p1] = xor_probs(x1, x2, timing, &channel);
      worst = std::min(worst, std::max(p0, p1));
    }
  return std::abs(1.0 - worst);
}

SqqnnModel sqqnn_train(const Eigen::MatrixXd& features,
                       const Eigen::VectorXd& labels, int degree,
                       double epsilon) {
  if (features.rows() != labels.size())
    throw ValidationError("sqqnn_train: feature/label row count mismatch");
  if (features.rows() == 0) throw ValidationError("sqqnn_train: empty data");
  if (degree < 1) throw ValidationError("sqqnn_train: degree must be >= 1");
  if (!(epsilon > 0.0 && epsilon <= 1e-8))
    throw ValidationError("sqqnn_train: epsilon must be in (0, 1e-8]");

  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels(i) == 1.0)
      ++pos;
    else if (labels(i) == -1.0)
      ++neg;
    else
      throw ValidationError("sqqnn_train: labels must be +1 or -1");
  }
  if (pos == 0 || neg == 0)
    throw ValidationError("sqqnn_train: both classes must be present");

  const Eigen::MatrixXd x = poly_features(features, degree);
  Eigen::VectorXd t(labels.size());
  for (Eigen::Index i = 0; i < labels.size(); ++i)
    t(i) = std::atanh(labels(i) * (1.0 - epsilon));

  SqqnnModel m;
  m.degree = degree;
  m.epsilon = epsilon;
  m.feature_count = static_cast<int>(features.cols());
  m.s = x.completeOrthogonalDecomposition().solve(t);
  return m;
}

double sqqnn_accuracy(const SqqnnModel& model, const Eigen::MatrixXd& features,
                      const Eigen::VectorXd& labels, ScenarioTiming timing,
                      const QuantumChannel* channel) {
  if (features.cols() != model.feature_count)
    throw ValidationError("sqqnn_accuracy: feature dimension mismatch");
  if (features.rows() != labels.size())
    throw ValidationError("sqqnn_accuracy: feature/label row count mismatch");
  const Eigen::MatrixXd x = poly_features(features, model.degree);
  int correct = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double z = model.s.dot(x.row(i));
    const double beta = std::acos(std::tanh(z));
    const CMat rho = compose_scenario(timing, gate_ry(beta), channel);
    const double mz = rho(0, 0).real() - rho(1, 1).real();
    const double pred = (mz >= 0.0) ? 1.0 : -1.0;
    if (pred == labels(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(x.rows());
}

std::pair<std::vector<int>, std::vector<int>> train_test_split(
    int n, double test_fraction, std::uint64_t seed) {
  if (n <= 0) throw ValidationError("train_test_split: empty dataset");
  if (!(test_fraction >= 0.0 && test_fraction < 1.0))
    throw ValidationError("train_test_split: test_fraction outside [0, 1)");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  const Rng rng(seed, "split");
  std::uint64_t counter = 0;
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.bits(counter++) %
                                   static_cast<std::uint64_t>(i + 1));
    std::swap(idx[i], idx[j]);
  }
  const int n_test = static_cast<int>(std::lround(test_fraction * n));
  std::vector<int> train(idx.begin(), idx.end() - n_test);
  std::vector<int> test(idx.end() - n_test, idx.end());
  return {train, test};
}

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& m,
                          const std::vector<int>& r) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(r.size()), m.cols());
  for (std::size_t i = 0; i < r.size(); ++i) out.row(i) = m.row(r[i]);
  return out;
}

Eigen::VectorXd take_rows(const Eigen::VectorXd& v,
                          const std::vector<int>& r) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) out(i) = v(r[i]);
  return out;
}

}  // namespace xtalk
