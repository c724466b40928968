#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeloc/estimator.hpp"

namespace edgeloc {

struct SimilarityReport {
  // Largest entry modulus of D_z^{-1} H D_z minus the matrix with H's
  // diagonal, ones at nonzero off-diagonal positions and zeros elsewhere
  // (the negated unit-weight Laplacian of the interaction graph).
  double max_deviation = 0.0;
};

// Conjugates H by diag(z_true) and measures how far the result is from the
// negated unit-weight Laplacian. Requires |z_k| = 1 (within 1e-9).
SimilarityReport similarity_check(const HMatrix& h,
                                  std::span<const Complex> z_true);

// M - rank(H); rank by complex Gaussian elimination with partial pivoting,
// pivot threshold 1e-9 relative to the largest initial entry modulus. That
// threshold is the single numerical knob of this module.
std::size_t nullity(const HMatrix& h);

// Unit-norm w with w^T H = 0 (plain transpose, no conjugation), computed by
// elimination on the transpose with back-substitution. The first component of
// modulus above 1e-12 is made real-positive, so the result is deterministic.
// Requires nullity(H) = 1; throws NumericalError otherwise.
std::vector<Complex> left_null_vector(const HMatrix& h);

// True when the initial estimate lies in the column space of H, i.e. the
// bilinear pairing with the left null vector satisfies
// |sum_k w_k z0_k| < 1e-9 * ||z0||. Trajectories started there decay to zero
// instead of reaching the consensus line.
bool is_degenerate_initial(std::span<const Complex> z0, const HMatrix& h);

enum class ConvergenceVerdict {
  kNoGlobalConsensus,
  kBiasedConsensus,
  kExactRecovery,
};

// "no-global-consensus" | "biased-consensus" | "exact-recovery"
std::string to_string(ConvergenceVerdict v);

struct ConvergencePrediction {
  ConvergenceVerdict verdict = ConvergenceVerdict::kNoGlobalConsensus;
  // A witness root vertex, or an explanation of its absence.
  std::string witness;
};

// Structural prediction: exact recovery when anchored at an edge agent whose
// edge-node tail is a spanning-tree root of the edge localization graph;
// biased consensus when unanchored and a spanning tree exists; no global
// consensus otherwise.
ConvergencePrediction predict_convergence(
    const EdgeLocalizationGraph& elg, const LocalizationInteractionGraph& lig,
    std::optional<std::size_t> anchor_agent);

}  // namespace edgeloc
