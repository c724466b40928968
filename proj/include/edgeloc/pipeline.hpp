#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeloc/analysis.hpp"
#include "edgeloc/estimator.hpp"
#include "edgeloc/locgraph.hpp"
#include "edgeloc/scenario.hpp"

namespace edgeloc {

struct PipelineOptions {
  // Apply the chained-angle closure before the graph constructions. Disable
  // for the strict reading where only directly measured angles count.
  bool apply_closure = true;
};

// Everything derived from a scenario short of running the estimator.
struct PipelineResult {
  AngleMeasurementSet raw;        // synthesized measurements (with overrides)
  Assumption2Report assumption2;
  bool closure_applied = false;   // false when disabled or assumption violated
  AngleMeasurementSet effective;  // closed when closure_applied
  CommunicationGraph comm;
  std::vector<UndesiredConnection> undesired;
  EdgeLocalizationGraph elg;
  LocalizationInteractionGraph lig;
};

PipelineResult run_pipeline(const Scenario& scenario,
                            const PipelineOptions& options = {});

// Ground-truth orientation of each edge agent: the bearing angle of its
// origin edge.
std::vector<double> true_orientations(const Scenario& scenario,
                                      const LocalizationInteractionGraph& lig);

struct SimulationResult {
  std::optional<std::size_t> anchor_agent;
  std::vector<double> theta_true;
  Trajectory trajectory;
  std::vector<double> spread_history;  // one entry per trajectory sample
  ErrorMetrics final_metrics;
  // First time the spread stayed flat (change < 1e-12) for 100 consecutive
  // steps; absent when that never happens within the horizon.
  std::optional<double> convergence_time;
  ConvergencePrediction prediction;
};

// Runs the estimator on the pipeline output. When `anchor_edge` is set, the
// matching edge agent is anchored at its true bearing and its interaction
// edges are removed. Initial estimates are seeded unit-circle draws unless
// `z0` is given (cfg.init_mode == kGiven).
SimulationResult simulate_scenario(
    const Scenario& scenario, const PipelineResult& pipeline,
    const EstimatorConfig& cfg,
    std::optional<std::pair<std::string, std::string>> anchor_edge = {},
    std::optional<std::vector<Complex>> z0 = {});

// Spread-stability detector used for SimulationResult::convergence_time.
std::optional<double> detect_convergence_time(
    const std::vector<double>& spread_history, double dt);

}  // namespace edgeloc
