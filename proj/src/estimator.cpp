#include "edgeloc/estimator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "edgeloc/geometry.hpp"

namespace edgeloc {

std::vector<Complex> HMatrix::apply(std::span<const Complex> z) const {
  std::vector<Complex> y(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    Complex acc = 0.0;
    const Complex* row = a_.data() + r * m_;
    for (std::size_t c = 0; c < m_; ++c) {
      acc += row[c] * z[c];
    }
    y[r] = acc;
  }
  return y;
}

HMatrix build_h_matrix(const LocalizationInteractionGraph& lig) {
  const std::size_t m = lig.size();
  HMatrix h(m);
  for (std::size_t k = 0; k < m; ++k) {
    h.at(k, k) = -static_cast<double>(lig.neighbors[k].size());
    for (const auto& [j, theta] : lig.neighbors[k]) {
      h.at(k, j) = std::exp(Complex(0.0, -theta));
    }
  }
  return h;
}

LocalizationInteractionGraph anchor(const LocalizationInteractionGraph& lig,
                                    std::size_t l) {
  if (l >= lig.size()) {
    throw Error("anchor: unknown edge agent");
  }
  LocalizationInteractionGraph out = lig;
  out.neighbors[l].clear();
  return out;
}

std::vector<Complex> random_unit_estimates(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double angle = -std::numbers::pi + 2.0 * std::numbers::pi * u;
    z[k] = std::exp(Complex(0.0, angle));
  }
  return z;
}

Trajectory integrate(const HMatrix& h, std::vector<Complex> z0,
                     const EstimatorConfig& cfg, const StepObserver& observer) {
  const std::size_t m = h.size();
  if (z0.size() != m) {
    throw Error("integrate: state length does not match the matrix");
  }
  if (!(cfg.dt > 0.0)) {
    throw Error("integrate: dt must be positive");
  }
  if (!(cfg.t_final >= 0.0)) {
    throw Error("integrate: t_final must be nonnegative");
  }
  const auto steps =
      static_cast<std::size_t>(std::llround(cfg.t_final / cfg.dt));

  Trajectory traj;
  traj.samples.reserve(steps + 1);
  traj.samples.push_back(EstimatorState{z0, 0.0});

  std::vector<Complex> tmp(m);
  for (std::size_t step = 1; step <= steps; ++step) {
    const auto k1 = h.apply(z0);
    for (std::size_t i = 0; i < m; ++i) {
      tmp[i] = z0[i] + 0.5 * cfg.dt * k1[i];
    }
    const auto k2 = h.apply(tmp);
    for (std::size_t i = 0; i < m; ++i) {
      tmp[i] = z0[i] + 0.5 * cfg.dt * k2[i];
    }
    const auto k3 = h.apply(tmp);
    for (std::size_t i = 0; i < m; ++i) {
      tmp[i] = z0[i] + cfg.dt * k3[i];
    }
    const auto k4 = h.apply(tmp);
    for (std::size_t i = 0; i < m; ++i) {
      z0[i] += cfg.dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(z0[i].real()) || !std::isfinite(z0[i].imag())) {
        throw NumericalError("non-finite state at t=" +
                             std::to_string(step * cfg.dt));
      }
    }
    const double t = static_cast<double>(step) * cfg.dt;
    traj.samples.push_back(EstimatorState{z0, t});
    if (observer && !observer(step, t, z0)) {
      break;
    }
  }
  return traj;
}

std::vector<double> orientation_estimates(const EstimatorState& state) {
  std::string zeros;
  for (std::size_t k = 0; k < state.estimates.size(); ++k) {
    const Complex& z = state.estimates[k];
    if (z.real() == 0.0 && z.imag() == 0.0) {
      zeros += (zeros.empty() ? "" : ", ") + std::to_string(k + 1);
    }
  }
  if (!zeros.empty()) {
    throw NumericalError("zero estimate (undefined argument) at agent(s) " +
                         zeros);
  }
  std::vector<double> theta(state.estimates.size());
  for (std::size_t k = 0; k < state.estimates.size(); ++k) {
    theta[k] = principal_value(
        std::atan2(state.estimates[k].imag(), state.estimates[k].real()));
  }
  return theta;
}

ErrorMetrics error_metrics(std::span<const double> theta_hat,
                           std::span<const double> theta_true) {
  if (theta_hat.size() != theta_true.size()) {
    throw Error("error_metrics: length mismatch");
  }
  ErrorMetrics m;
  m.per_agent.resize(theta_hat.size());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < theta_hat.size(); ++k) {
    m.per_agent[k] = principal_value(theta_hat[k] - theta_true[k]);
    sx += std::cos(m.per_agent[k]);
    sy += std::sin(m.per_agent[k]);
  }
  if (m.per_agent.empty()) {
    return m;
  }
  m.bias = (sx == 0.0 && sy == 0.0) ? 0.0 : principal_value(std::atan2(sy, sx));
  for (double e : m.per_agent) {
    m.spread = std::max(m.spread, std::abs(principal_value(e - m.bias)));
  }
  return m;
}

}  // namespace edgeloc
