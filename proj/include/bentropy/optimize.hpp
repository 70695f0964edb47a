#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bentropy {

struct OptimizerConfig {
  int starts = 64;
  int max_evals_per_start = 2000;
  double diameter_tol = 1e-10;
  std::uint64_t seed = 42;
};

struct MultistartResult {
  std::vector<double> x;
  double value = 0.0;
  int starts_used = 0;
  bool converged = false;  // at least one start met the diameter tolerance
};

using Objective = std::function<double(std::span<const double>)>;

// Minimizes f over dim parameters with Nelder-Mead simplex descent from
// cfg.starts random initial points (components uniform in [lo, hi)), plus
// any caller-supplied deterministic initial points. Starts are seeded
// per-index from cfg.seed, so the result does not depend on evaluation
// order. Ties in the best value resolve to the earliest start.
MultistartResult multistart_minimize(const Objective& f, std::size_t dim, double lo, double hi,
                                     const OptimizerConfig& cfg,
                                     const std::vector<std::vector<double>>& extra_starts = {});

}  // namespace bentropy
