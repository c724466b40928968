#include "edgeloc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace edgeloc {

namespace {
constexpr double kRankTol = 1e-9;
constexpr double kUnitTol = 1e-9;
constexpr double kDegenerateTol = 1e-9;

double max_modulus(const HMatrix& h) {
  double m = 0.0;
  for (std::size_t r = 0; r < h.size(); ++r) {
    for (std::size_t c = 0; c < h.size(); ++c) {
      m = std::max(m, std::abs(h(r, c)));
    }
  }
  return m;
}
}  // namespace

SimilarityReport similarity_check(const HMatrix& h,
                                  std::span<const Complex> z_true) {
  const std::size_t m = h.size();
  if (z_true.size() != m) {
    throw Error("similarity_check: length mismatch");
  }
  for (const Complex& z : z_true) {
    if (std::abs(std::abs(z) - 1.0) > kUnitTol) {
      throw Error("similarity_check: z is not on the unit circle");
    }
  }
  SimilarityReport report;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      const Complex conjugated = h(k, j) * z_true[j] / z_true[k];
      Complex expected = 0.0;
      if (k == j) {
        expected = h(k, k);
      } else if (h(k, j) != Complex(0.0)) {
        expected = 1.0;
      }
      report.max_deviation =
          std::max(report.max_deviation, std::abs(conjugated - expected));
    }
  }
  return report;
}

std::size_t nullity(const HMatrix& h) {
  const std::size_t m = h.size();
  const double scale = max_modulus(h);
  if (scale == 0.0) {
    return m;
  }
  const double thresh = kRankTol * scale;
  std::vector<Complex> a(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      a[r * m + c] = h(r, c);
    }
  }
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t pivot = row;
    for (std::size_t r = row + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[pivot * m + col])) {
        pivot = r;
      }
    }
    if (std::abs(a[pivot * m + col]) <= thresh) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(a[pivot * m + c], a[row * m + c]);
      }
    }
    for (std::size_t r = row + 1; r < m; ++r) {
      const Complex f = a[r * m + col] / a[row * m + col];
      if (f != Complex(0.0)) {
        for (std::size_t c = col; c < m; ++c) {
          a[r * m + c] -= f * a[row * m + c];
        }
      }
    }
    ++row;
    ++rank;
  }
  return m - rank;
}

std::vector<Complex> left_null_vector(const HMatrix& h) {
  const std::size_t m = h.size();
  if (m == 0) {
    throw NumericalError("left_null_vector: empty matrix");
  }
  const double scale = max_modulus(h);
  const double thresh = kRankTol * scale;
  // Work on B = H^T so that B w = 0 gives w^T H = 0.
  std::vector<Complex> b(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      b[r * m + c] = h(c, r);
    }
  }
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t pivot = row;
    for (std::size_t r = row + 1; r < m; ++r) {
      if (std::abs(b[r * m + col]) > std::abs(b[pivot * m + col])) {
        pivot = r;
      }
    }
    if (scale == 0.0 || std::abs(b[pivot * m + col]) <= thresh) {
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(b[pivot * m + c], b[row * m + c]);
      }
    }
    for (std::size_t r = row + 1; r < m; ++r) {
      const Complex f = b[r * m + col] / b[row * m + col];
      if (f != Complex(0.0)) {
        for (std::size_t c = col; c < m; ++c) {
          b[r * m + c] -= f * b[row * m + c];
        }
      }
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  if (m - pivot_col.size() != 1) {
    throw NumericalError("left_null_vector: nullity is " +
                         std::to_string(m - pivot_col.size()) + ", expected 1");
  }
  std::size_t free_col = m;
  for (std::size_t c = 0; c < m; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  std::vector<Complex> w(m, 0.0);
  w[free_col] = 1.0;
  for (std::size_t r = pivot_col.size(); r-- > 0;) {
    const std::size_t c = pivot_col[r];
    Complex acc = 0.0;
    for (std::size_t j = c + 1; j < m; ++j) {
      acc += b[r * m + j] * w[j];
    }
    w[c] = -acc / b[r * m + c];
  }
  double norm = 0.0;
  for (const Complex& x : w) {
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (Complex& x : w) {
    x /= norm;
  }
  for (const Complex& x : w) {
    if (std::abs(x) > 1e-12) {
      const Complex phase = std::conj(x) / std::abs(x);
      for (Complex& y : w) {
        y *= phase;
      }
      break;
    }
  }
  return w;
}

bool is_degenerate_initial(std::span<const Complex> z0, const HMatrix& h) {
  if (z0.size() != h.size()) {
    throw Error("is_degenerate_initial: length mismatch");
  }
  const auto w = left_null_vector(h);
  Complex pairing = 0.0;
  double norm = 0.0;
  for (std::size_t k = 0; k < z0.size(); ++k) {
    pairing += w[k] * z0[k];
    norm += std::norm(z0[k]);
  }
  return std::abs(pairing) < kDegenerateTol * std::sqrt(norm);
}

std::string to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::kNoGlobalConsensus:
      return "no-global-consensus";
    case ConvergenceVerdict::kBiasedConsensus:
      return "biased-consensus";
    case ConvergenceVerdict::kExactRecovery:
      return "exact-recovery";
  }
  return "no-global-consensus";
}

ConvergencePrediction predict_convergence(
    const EdgeLocalizationGraph& elg, const LocalizationInteractionGraph& lig,
    std::optional<std::size_t> anchor_agent) {
  const auto roots = spanning_tree_roots(elg.graph);
  ConvergencePrediction out;
  if (roots.empty()) {
    out.verdict = ConvergenceVerdict::kNoGlobalConsensus;
    out.witness = "edge localization graph has no oriented spanning tree";
    return out;
  }
  std::set<std::string> root_names;
  for (auto r : roots) {
    root_names.insert(elg.graph.name(r));
  }
  if (anchor_agent) {
    if (*anchor_agent >= lig.size()) {
      throw Error("predict_convergence: unknown edge agent");
    }
    const std::string& tail = lig.agents[*anchor_agent].tail;
    if (root_names.count(tail)) {
      out.verdict = ConvergenceVerdict::kExactRecovery;
      out.witness = tail;
    } else {
      out.verdict = ConvergenceVerdict::kNoGlobalConsensus;
      out.witness = "anchor tail \"" + tail + "\" is not a spanning-tree root";
    }
    return out;
  }
  out.verdict = ConvergenceVerdict::kBiasedConsensus;
  out.witness = *root_names.begin();
  return out;
}

}  // namespace edgeloc
