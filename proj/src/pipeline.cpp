#include "edgeloc/pipeline.hpp"

#include <cmath>

namespace edgeloc {

PipelineResult run_pipeline(const Scenario& scenario,
                            const PipelineOptions& options) {
  PipelineResult pr;
  pr.raw = synthesize_measurements(scenario);
  pr.assumption2 = check_assumption2(pr.raw);
  if (options.apply_closure && pr.assumption2.all_satisfied) {
    pr.effective = close_measurements(pr.raw);
    pr.closure_applied = true;
  } else {
    pr.effective = pr.raw;
  }
  pr.comm = build_communication_graph(pr.raw, scenario.agent_ids());
  pr.undesired = find_undesired_connections(pr.comm, pr.effective);
  pr.elg = build_edge_localization_graph(pr.comm, pr.effective);
  pr.lig = build_localization_interaction_graph(pr.elg, pr.effective);
  return pr;
}

std::vector<double> true_orientations(const Scenario& scenario,
                                      const LocalizationInteractionGraph& lig) {
  std::vector<double> theta(lig.size());
  for (std::size_t k = 0; k < lig.size(); ++k) {
    theta[k] = bearing_angle(scenario.position(lig.agents[k].origin_tail),
                             scenario.position(lig.agents[k].origin_head));
  }
  return theta;
}

std::optional<double> detect_convergence_time(
    const std::vector<double>& spread_history, double dt) {
  constexpr double kFlatTol = 1e-12;
  constexpr std::size_t kFlatSteps = 100;
  std::size_t run = 0;
  for (std::size_t i = 1; i < spread_history.size(); ++i) {
    run = std::abs(spread_history[i] - spread_history[i - 1]) < kFlatTol
              ? run + 1
              : 0;
    if (run >= kFlatSteps) {
      return static_cast<double>(i) * dt;
    }
  }
  return std::nullopt;
}

SimulationResult simulate_scenario(
    const Scenario& scenario, const PipelineResult& pipeline,
    const EstimatorConfig& cfg,
    std::optional<std::pair<std::string, std::string>> anchor_edge,
    std::optional<std::vector<Complex>> z0) {
  SimulationResult out;
  out.theta_true = true_orientations(scenario, pipeline.lig);

  const LocalizationInteractionGraph* lig = &pipeline.lig;
  LocalizationInteractionGraph anchored;
  if (anchor_edge) {
    const auto l =
        pipeline.lig.find_by_origin(anchor_edge->first, anchor_edge->second);
    if (!l) {
      throw Error("anchor edge (" + anchor_edge->first + "," +
                  anchor_edge->second + ") is not an edge of the "
                  "communication graph");
    }
    out.anchor_agent = *l;
    anchored = anchor(pipeline.lig, *l);
    lig = &anchored;
  }
  out.prediction =
      predict_convergence(pipeline.elg, pipeline.lig, out.anchor_agent);

  const HMatrix h = build_h_matrix(*lig);
  std::vector<Complex> initial;
  if (cfg.init_mode == InitMode::kGiven) {
    if (!z0 || z0->size() != lig->size()) {
      throw Error("simulate_scenario: missing or mismatched initial state");
    }
    initial = std::move(*z0);
  } else {
    initial = random_unit_estimates(lig->size(), cfg.seed);
  }
  if (out.anchor_agent) {
    // The anchored agent starts at, and by the zero row stays at, its true
    // orientation.
    initial[*out.anchor_agent] =
        std::exp(Complex(0.0, out.theta_true[*out.anchor_agent]));
  }

  auto spread_of = [&](std::span<const Complex> z) {
    EstimatorState state{std::vector<Complex>(z.begin(), z.end()), 0.0};
    return error_metrics(orientation_estimates(state), out.theta_true).spread;
  };
  out.spread_history.push_back(spread_of(initial));

  std::size_t flat_run = 0;
  StepObserver observer = [&](std::size_t, double, std::span<const Complex> z) {
    const double spread = spread_of(z);
    flat_run = std::abs(spread - out.spread_history.back()) < 1e-12
                   ? flat_run + 1
                   : 0;
    out.spread_history.push_back(spread);
    return !(cfg.early_stop && flat_run >= 100);
  };
  out.trajectory = integrate(h, std::move(initial), cfg, observer);

  const auto& last = out.trajectory.samples.back();
  out.final_metrics =
      error_metrics(orientation_estimates(last), out.theta_true);
  out.convergence_time = detect_convergence_time(out.spread_history, cfg.dt);
  return out;
}

}  // namespace edgeloc
