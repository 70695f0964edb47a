#include "bentropy/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bentropy/eigh.hpp"
#include "bentropy/states.hpp"

namespace bentropy {

namespace {

constexpr double kEntropyClamp = 1e-12;

double xlog2(double x) { return x < kEntropyClamp ? 0.0 : x * std::log2(x); }

}  // namespace

double MeasurementAxis::norm() const { return std::sqrt(z1 * z1 + z2 * z2 + z3 * z3); }

MeasurementAxis axis_from_param(const UnitaryAxisParam& p) {
  if (std::abs(p.norm_sq() - 1.0) > 1e-9)
    throw std::invalid_argument("axis_from_param: parameter is not normalized");
  MeasurementAxis n;
  n.z1 = 2.0 * (-p.t * p.y2 + p.y1 * p.y3);
  n.z2 = 2.0 * (p.t * p.y1 + p.y2 * p.y3);
  n.z3 = p.t * p.t + p.y3 * p.y3 - p.y1 * p.y1 - p.y2 * p.y2;
  return n;
}

CMatrix unitary_from_param(const UnitaryAxisParam& p) {
  if (std::abs(p.norm_sq() - 1.0) > 1e-9)
    throw std::invalid_argument("unitary_from_param: parameter is not normalized");
  const complex i(0.0, 1.0);
  return CMatrix::from_rows({{p.t + i * p.y3, i * p.y1 + p.y2}, {i * p.y1 - p.y2, p.t - i * p.y3}});
}

void ProjectorBasis::check_frame(const CMatrix& frame, double tol) {
  if (!frame.is_square() || frame.rows() == 0)
    throw std::invalid_argument("ProjectorBasis: frame must be square and nonempty");
  CMatrix g = frame.adjoint() * frame;
  double defect = max_abs_diff(g, CMatrix::identity(frame.rows()));
  if (defect > tol) {
    std::ostringstream os;
    os << "ProjectorBasis: frame columns are not orthonormal (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }
}

ProjectorBasis ProjectorBasis::general(CMatrix frame) {
  check_frame(frame, 1e-9);
  return ProjectorBasis(std::move(frame), BasisStructure::General);
}

ProjectorBasis ProjectorBasis::computational(std::size_t d) {
  return ProjectorBasis(CMatrix::identity(d), BasisStructure::General);
}

ProjectorBasis ProjectorBasis::product(const ProjectorBasis& a, const ProjectorBasis& b) {
  ProjectorBasis out(kron(a.frame(), b.frame()), BasisStructure::LocalProduct);
  out.dim_a_ = a.dim();
  out.dim_b_ = b.dim();
  out.factors_ = {a.frame(), b.frame()};
  return out;
}

ProjectorBasis ProjectorBasis::same_local(CMatrix local_frame) {
  check_frame(local_frame, 1e-9);
  ProjectorBasis out(kron(local_frame, local_frame), BasisStructure::SameLocal);
  out.dim_a_ = local_frame.rows();
  out.dim_b_ = local_frame.rows();
  out.factors_ = {local_frame, std::move(local_frame)};
  return out;
}

const CMatrix& ProjectorBasis::factor_a() const {
  if (factors_.empty()) throw std::logic_error("ProjectorBasis: no factor frames");
  return factors_[0];
}

const CMatrix& ProjectorBasis::factor_b() const {
  if (factors_.size() < 2) throw std::logic_error("ProjectorBasis: no factor frames");
  return factors_[1];
}

CMatrix ProjectorBasis::projector(std::size_t k) const {
  const std::size_t d = dim();
  if (k >= d) throw std::invalid_argument("ProjectorBasis: projector index out of range");
  CMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i, j) = frame_(i, k) * std::conj(frame_(j, k));
  return p;
}

ProjectorBasis qubit_basis_from_axis(const MeasurementAxis& n) {
  double len = n.norm();
  if (std::abs(len - 1.0) > 1e-6)
    throw std::invalid_argument("qubit_basis_from_axis: axis is not unit length");
  double z1 = n.z1 / len, z2 = n.z2 / len, z3 = n.z3 / len;

  // Eigenvectors of n . sigma: |u_+> = (cos(t/2), e^{i phi} sin(t/2)),
  // |u_-> = (-e^{-i phi} sin(t/2), cos(t/2)) with n in spherical angles.
  double theta = std::acos(std::clamp(z3, -1.0, 1.0));
  double phi = (z1 == 0.0 && z2 == 0.0) ? 0.0 : std::atan2(z2, z1);
  double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
  complex eip = std::polar(1.0, phi);
  CMatrix frame = CMatrix::from_rows({{ch, -std::conj(eip) * sh}, {eip * sh, ch}});
  return ProjectorBasis::general(std::move(frame));
}

ProjectorBasis product_basis(const ProjectorBasis& a, const ProjectorBasis& b) {
  return ProjectorBasis::product(a, b);
}

DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectorBasis& basis) {
  if (rho.dim() != basis.dim())
    throw std::invalid_argument("apply_measurement: state and basis dimensions differ");
  const CMatrix& v = basis.frame();
  CMatrix w = v.adjoint() * rho.matrix() * v;
  const std::size_t d = w.rows();
  CMatrix diag(d, d);
  for (std::size_t k = 0; k < d; ++k) diag(k, k) = complex(w(k, k).real(), 0.0);
  CMatrix out = v * diag * v.adjoint();
  return DensityMatrix::validated(std::move(out));
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho, const ProjectorBasis& basis) {
  if (rho.dim() != basis.dim())
    throw std::invalid_argument("outcome_probabilities: state and basis dimensions differ");
  const CMatrix& v = basis.frame();
  const CMatrix& m = rho.matrix();
  const std::size_t d = rho.dim();
  std::vector<double> p(d);
  // p_k = <u_k| rho |u_k>, computed column by column.
  for (std::size_t k = 0; k < d; ++k) {
    complex acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      complex row = 0.0;
      for (std::size_t j = 0; j < d; ++j) row += m(i, j) * v(j, k);
      acc += std::conj(v(i, k)) * row;
    }
    p[k] = std::max(0.0, acc.real());
  }
  return p;
}

double shannon_entropy(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) s -= xlog2(x);
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  EigenDecomposition eig = eigh(rho.matrix());
  double s = 0.0;
  for (double l : eig.eigenvalues) s -= xlog2(l);
  return s;
}

double basis_entropy_given(const DensityMatrix& rho, const ProjectorBasis& basis,
                           double entropy_of_rho) {
  return shannon_entropy(outcome_probabilities(rho, basis)) - entropy_of_rho;
}

double basis_entropy(const DensityMatrix& rho, const ProjectorBasis& basis) {
  return basis_entropy_given(rho, basis, von_neumann_entropy(rho));
}

}  // namespace bentropy
