#include "bentropy/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bentropy/rng.hpp"

namespace bentropy {

namespace {

struct NmOutcome {
  std::vector<double> x;
  double value;
  bool converged;
};

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        double t = pts[i][k] - pts[j][k];
        s += t * t;
      }
      d = std::max(d, std::sqrt(s));
    }
  return d;
}

// Standard Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2).
NmOutcome nelder_mead(const Objective& f, const std::vector<double>& x0, double step,
                      int max_evals, double diam_tol) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;

  int evals = 0;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(pts[i]);
    ++evals;
  }

  auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      p2[i] = pts[idx[i]];
      f2[i] = fv[idx[i]];
    }
    pts.swap(p2);
    fv.swap(f2);
  };

  bool converged = false;
  while (evals < max_evals) {
    order();
    if (simplex_diameter(pts) < diam_tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

    auto along = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + coef * (pts[n][k] - centroid[k]);
      return x;
    };

    std::vector<double> xr = along(-1.0);
    double fr = f(xr);
    ++evals;

    if (fr < fv[0]) {
      std::vector<double> xe = along(-2.0);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[n] = std::move(xe);
        fv[n] = fe;
      } else {
        pts[n] = std::move(xr);
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      pts[n] = std::move(xr);
      fv[n] = fr;
    } else {
      bool outside = fr < fv[n];
      std::vector<double> xc = along(outside ? -0.5 : 0.5);
      double fc = f(xc);
      ++evals;
      if (fc < std::min(fr, fv[n])) {
        pts[n] = std::move(xc);
        fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n && evals < max_evals; ++i) {
          for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
          fv[i] = f(pts[i]);
          ++evals;
        }
      }
    }
  }

  order();
  return {pts[0], fv[0], converged};
}

}  // namespace

MultistartResult multistart_minimize(const Objective& f, std::size_t dim, double lo, double hi,
                                     const OptimizerConfig& cfg,
                                     const std::vector<std::vector<double>>& extra_starts) {
  if (dim == 0) throw std::invalid_argument("multistart_minimize: zero-dimensional problem");
  if (cfg.starts < 1) throw std::invalid_argument("multistart_minimize: needs at least one start");

  const double step = 0.3 * (hi - lo);
  MultistartResult best;
  best.value = std::numeric_limits<double>::infinity();

  auto consider = [&](const NmOutcome& o) {
    if (o.value < best.value) {
      best.value = o.value;
      best.x = o.x;
    }
    best.converged = best.converged || o.converged;
  };

  for (const auto& x0 : extra_starts) {
    if (x0.size() != dim)
      throw std::invalid_argument("multistart_minimize: extra start has wrong dimension");
    consider(nelder_mead(f, x0, step, cfg.max_evals_per_start, cfg.diameter_tol));
  }

  for (int s = 0; s < cfg.starts; ++s) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(s) + 1);
    std::vector<double> x0(dim);
    for (auto& x : x0) x = rng.uniform(lo, hi);
    consider(nelder_mead(f, x0, step, cfg.max_evals_per_start, cfg.diameter_tol));
    ++best.starts_used;
  }

  return best;
}

}  // namespace bentropy
