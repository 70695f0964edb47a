#include "bentropy/extremal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bentropy/eigh.hpp"

namespace bentropy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double xlog2(double x) { return x < 1e-12 ? 0.0 : x * std::log2(x); }

// Unitary from one Givens rotation (angle, phase) per coordinate pair,
// applied in lexicographic pair order.
CMatrix frame_from_givens(std::size_t d, std::span<const double> params) {
  CMatrix v = CMatrix::identity(d);
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      double theta = params[idx++];
      double phi = params[idx++];
      double c = std::cos(theta), s = std::sin(theta);
      complex e = std::polar(1.0, phi);
      // Right-multiply by the rotation acting on columns i and j.
      for (std::size_t r = 0; r < d; ++r) {
        complex vi = v(r, i), vj = v(r, j);
        v(r, i) = c * vi + std::conj(e) * s * vj;
        v(r, j) = -e * s * vi + c * vj;
      }
    }
  }
  return v;
}

// Fourier rotation of the eigenbasis of rho: outcome probabilities are
// uniform for every state, so the basis entropy is log2(D) - S(rho).
ProjectorBasis unbiased_frame(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  EigenDecomposition eig = eigh(rho.matrix());
  CMatrix f(d, d);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      f(j, k) = std::polar(inv, kTwoPi * static_cast<double>(j * k) / static_cast<double>(d));
  return ProjectorBasis::general(eig.eigenvectors * f);
}

ExtremalResult run_extremal(const DensityMatrix& rho, const BasisClass& cls,
                            const OptimizerConfig& cfg, bool maximize) {
  if (cls.dim() != rho.dim())
    throw std::invalid_argument("extremal search: class and state dimensions differ");

  const double s0 = von_neumann_entropy(rho);
  const double sign = maximize ? -1.0 : 1.0;
  Objective objective = [&](std::span<const double> params) {
    return sign * basis_entropy_given(rho, cls.build(params), s0);
  };

  MultistartResult ms =
      multistart_minimize(objective, cls.parameter_count(), 0.0, kTwoPi, cfg);

  ProjectorBasis best = cls.build(ms.x);
  double best_value = basis_entropy_given(rho, best, s0);

  if (maximize && cls.kind() == BasisClass::Kind::GeneralRank1) {
    ProjectorBasis candidate = unbiased_frame(rho);
    double v = basis_entropy_given(rho, candidate, s0);
    if (v > best_value) {
      best = std::move(candidate);
      best_value = v;
    }
  }

  return {best_value, std::move(best), ms.starts_used, ms.converged};
}

}  // namespace

BasisClass BasisClass::general_rank1(std::size_t d) {
  if (d < 2) throw std::invalid_argument("BasisClass: dimension must be at least 2");
  return BasisClass(Kind::GeneralRank1, d, 1);
}

BasisClass BasisClass::product_local(std::size_t da, std::size_t db) {
  if (da < 2 || db < 2) throw std::invalid_argument("BasisClass: factor dimensions must be >= 2");
  return BasisClass(Kind::ProductLocal, da, db);
}

BasisClass BasisClass::same_local(std::size_t d) {
  if (d < 2) throw std::invalid_argument("BasisClass: dimension must be at least 2");
  return BasisClass(Kind::SameLocal, d, d);
}

std::size_t BasisClass::dim() const {
  switch (kind_) {
    case Kind::GeneralRank1: return da_;
    case Kind::ProductLocal: return da_ * db_;
    case Kind::SameLocal: return da_ * da_;
  }
  return 0;
}

std::size_t BasisClass::parameter_count() const {
  switch (kind_) {
    case Kind::GeneralRank1: return da_ * (da_ - 1);
    case Kind::ProductLocal: return da_ * (da_ - 1) + db_ * (db_ - 1);
    case Kind::SameLocal: return da_ * (da_ - 1);
  }
  return 0;
}

ProjectorBasis BasisClass::build(std::span<const double> params) const {
  if (params.size() != parameter_count())
    throw std::invalid_argument("BasisClass::build: wrong parameter count");
  switch (kind_) {
    case Kind::GeneralRank1:
      return ProjectorBasis::general(frame_from_givens(da_, params));
    case Kind::ProductLocal: {
      auto fa = frame_from_givens(da_, params.subspan(0, da_ * (da_ - 1)));
      auto fb = frame_from_givens(db_, params.subspan(da_ * (da_ - 1)));
      return ProjectorBasis::product(ProjectorBasis::general(std::move(fa)),
                                     ProjectorBasis::general(std::move(fb)));
    }
    case Kind::SameLocal:
      return ProjectorBasis::same_local(frame_from_givens(da_, params));
  }
  throw std::logic_error("BasisClass::build: unreachable");
}

ExtremalResult max_basis_entropy(const DensityMatrix& rho, const BasisClass& cls,
                                 const OptimizerConfig& cfg) {
  return run_extremal(rho, cls, cfg, true);
}

ExtremalResult min_basis_entropy(const DensityMatrix& rho, const BasisClass& cls,
                                 const OptimizerConfig& cfg) {
  if (cls.kind() == BasisClass::Kind::GeneralRank1) {
    // Measuring in the eigenbasis commutes with rho, so the minimum is 0.
    if (cls.dim() != rho.dim())
      throw std::invalid_argument("extremal search: class and state dimensions differ");
    EigenDecomposition eig = eigh(rho.matrix());
    ProjectorBasis basis = ProjectorBasis::general(eig.eigenvectors);
    double value = basis_entropy(rho, basis);
    return {value, std::move(basis), 0, true};
  }
  return run_extremal(rho, cls, cfg, false);
}

MeasurementAxis orthogonal_axis_witness(const BlochVector& v) {
  MeasurementAxis axis;
  double plane = std::hypot(v.a, v.c);
  if (plane < 1e-15) {
    // Bloch vector along sigma2 or zero: any equatorial direction works for
    // the former, anything at all for the latter.
    if (std::abs(v.b) < 1e-15) return {0.0, 0.0, 1.0};
    return {1.0, 0.0, 0.0};
  }
  axis = {-v.c / plane, 0.0, v.a / plane};
  // n and -n give the same projector pair; fix the sign so the first nonzero
  // component is positive.
  double lead = axis.z1 != 0.0 ? axis.z1 : (axis.z2 != 0.0 ? axis.z2 : axis.z3);
  if (lead < 0.0) {
    axis.z1 = -axis.z1;
    axis.z2 = -axis.z2;
    axis.z3 = -axis.z3;
  }
  return axis;
}

UnitaryAxisParam uniform_outcome_param(double a, double b, double c) {
  if (a * c == 0.0)
    throw std::invalid_argument("uniform_outcome_param: a*c = 0 (solution divides by a*c)");

  double radicand = a * a * a * a - 2.0 * a * a * b * c;
  if (radicand < 0.0) {
    std::ostringstream os;
    os << "uniform_outcome_param: radicand a^4 - 2a^2bc = " << radicand << " is negative";
    throw std::invalid_argument(os.str());
  }

  double p = 2.0 * (2.0 * a * a + b * b - 2.0 * b * c + c * c);
  if (p == 0.0) throw std::invalid_argument("uniform_outcome_param: P = 2(2a^2+b^2-2bc+c^2) = 0");

  double root = std::sqrt(radicand);
  double q = a * a / p + c * c / p - b * c / p - root / p;
  if (q < 0.0) {
    std::ostringstream os;
    os << "uniform_outcome_param: inner radicand (a^2+c^2-bc-sqrt(a^4-2a^2bc))/P = " << q
       << " is negative";
    throw std::invalid_argument(os.str());
  }

  double y = std::sqrt(q);
  double y3cu = q * y;  // y^3
  double t = (1.0 / (a * c)) *
             (2.0 * a * a * y - b * c * y + c * c * y - 4.0 * a * a * y3cu - 2.0 * b * b * y3cu +
              4.0 * b * c * y3cu - 2.0 * c * c * y3cu);

  UnitaryAxisParam out{t, 0.0, y, y};
  if (std::abs(out.norm_sq() - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "uniform_outcome_param: solution is not normalized (t^2+|y|^2 = " << out.norm_sq()
       << ")";
    throw std::invalid_argument(os.str());
  }
  return out;
}

double bell_diagonal_min_basis_entropy(const BellDiagonalParams& p) {
  if (!p.is_physical())
    throw std::invalid_argument("bell_diagonal_min_basis_entropy: unphysical coefficients");
  double c = std::max({std::abs(p.c1), std::abs(p.c2), std::abs(p.c3)});
  double measured = -2.0 * xlog2((1.0 - c) / 4.0) - 2.0 * xlog2((1.0 + c) / 4.0);
  double s = 0.0;
  for (double l : p.eigenvalues()) s -= xlog2(std::max(0.0, l));
  return measured - s;
}

const char* to_string(PurityClass c) {
  switch (c) {
    case PurityClass::Pure: return "Pure";
    case PurityClass::Mixed: return "Mixed";
    case PurityClass::MaximallyMixed: return "MaximallyMixed";
  }
  return "?";
}

PurityClass classify_purity(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  ExtremalResult r = max_basis_entropy(rho, BasisClass::general_rank1(rho.dim()), cfg);
  double cap = std::log2(static_cast<double>(rho.dim()));
  if (std::abs(r.value - cap) <= 1e-6) return PurityClass::Pure;
  if (r.value <= 1e-6) return PurityClass::MaximallyMixed;
  return PurityClass::Mixed;
}

}  // namespace bentropy
