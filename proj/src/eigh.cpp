#include "bentropy/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bentropy {

namespace {

double off_diagonal_norm_sq(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

EigenDecomposition eigh(const CMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("eigh: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("eigh: empty matrix");
  if (hermiticity_defect(input) > 1e-10)
    throw std::invalid_argument("eigh: matrix is not Hermitian within 1e-10");

  // Work on the Hermitian average so roundoff asymmetry in the input cannot
  // leak into the iteration.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

  CMatrix v = CMatrix::identity(n);

  double frob_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob_sq += std::norm(a(i, j));
  const double stop = std::max(frob_sq, 1e-300) * 1e-28;

  const int max_sweeps = 80;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm_sq(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        complex apq = a(p, q);
        double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Phase that makes the pivot real, then a real Jacobi angle for the
        // symmetric 2x2 [[app, |apq|], [|apq|, aqq]].
        complex phase = apq / mag;
        double app = a(p, p).real();
        double aqq = a(q, q).real();
        double theta = 0.5 * (aqq - app) / mag;
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        complex sp = s * phase;             // multiplies column q into column p
        complex spc = std::conj(sp);

        // A <- J^dagger A J with J acting on columns p and q:
        //   col_p' = c*col_p - conj(sp)*col_q, col_q' = sp*col_p + c*col_q
        for (std::size_t k = 0; k < n; ++k) {
          complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - spc * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = spc * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = complex(a(p, p).real(), 0.0);
        a(q, q) = complex(a(q, q).real(), 0.0);

        for (std::size_t k = 0; k < n; ++k) {
          complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - spc * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace bentropy
