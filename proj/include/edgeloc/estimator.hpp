#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "edgeloc/locgraph.hpp"

namespace edgeloc {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class HMatrix {
 public:
  HMatrix() = default;
  explicit HMatrix(std::size_t m) : m_(m), a_(m * m) {}

  std::size_t size() const { return m_; }
  Complex& at(std::size_t r, std::size_t c) { return a_[r * m_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return a_[r * m_ + c];
  }
  Complex operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  // y = H z
  std::vector<Complex> apply(std::span<const Complex> z) const;

 private:
  std::size_t m_ = 0;
  std::vector<Complex> a_;
};

// System matrix of the estimation dynamics dz/dt = H z:
//   H[k][k] = -|N_k|, H[k][j] = e^{-i theta_jk} for out-neighbors j, else 0.
HMatrix build_h_matrix(const LocalizationInteractionGraph& lig);

// Removes all outgoing interaction edges of agent l, so its row of H becomes
// zero and the agent never updates. Everything else is unchanged.
LocalizationInteractionGraph anchor(const LocalizationInteractionGraph& lig,
                                    std::size_t l);

enum class InitMode { kUnitCircleRandom, kGiven };

struct EstimatorConfig {
  double dt = 0.01;          // integration step (s)
  double t_final = 30.0;     // horizon (s)
  std::uint64_t seed = 0;
  std::optional<std::size_t> anchor;  // edge-agent index
  InitMode init_mode = InitMode::kUnitCircleRandom;
  // Stop once the error spread has been flat for 100 consecutive steps.
  // Needs ground truth, so it only takes effect in simulate_scenario.
  bool early_stop = false;
};

struct EstimatorState {
  std::vector<Complex> estimates;
  double time = 0.0;
};

struct Trajectory {
  std::vector<EstimatorState> samples;  // strictly increasing time stamps
};

// Initial estimates drawn uniformly on the unit circle; identical seeds yield
// identical draws on every platform.
std::vector<Complex> random_unit_estimates(std::size_t m, std::uint64_t seed);

// Called after every accepted step; return false to stop the integration.
using StepObserver =
    std::function<bool(std::size_t step, double t, std::span<const Complex>)>;

// Classical fixed-step 4th-order Runge-Kutta for dz/dt = H z from t = 0 to
// cfg.t_final, one sample per step. Deterministic given its inputs. Throws
// NumericalError when the state stops being finite.
Trajectory integrate(const HMatrix& h, std::vector<Complex> z0,
                     const EstimatorConfig& cfg,
                     const StepObserver& observer = {});

// Principal arguments of the estimates. Throws NumericalError when any
// estimate is exactly zero (undefined argument), naming the agents.
std::vector<double> orientation_estimates(const EstimatorState& state);

struct ErrorMetrics {
  std::vector<double> per_agent;  // PV(theta_hat - theta_true)
  double bias = 0.0;              // circular mean of the per-agent errors
  double spread = 0.0;            // max |PV(error - bias)|
};

ErrorMetrics error_metrics(std::span<const double> theta_hat,
                           std::span<const double> theta_true);

}  // namespace edgeloc
