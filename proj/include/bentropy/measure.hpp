#pragma once

#include <cstdint>
#include <vector>

#include "bentropy/density.hpp"

namespace bentropy {

// Unit direction on the Bloch sphere selecting the projector pair
// P_pm = (1/2)(I pm n . sigma).
struct MeasurementAxis {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 1.0;
  double norm() const;
};

// Qubit unitary written as V = t I + i (y1 sigma1 + y2 sigma2 + y3 sigma3)
// with t^2 + y1^2 + y2^2 + y3^2 = 1.
struct UnitaryAxisParam {
  double t = 1.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;
  double norm_sq() const { return t * t + y1 * y1 + y2 * y2 + y3 * y3; }
};

// The measurement axis induced by conjugating the computational projectors
// with V(t, y):
//   z1 = 2(-t y2 + y1 y3), z2 = 2(t y1 + y2 y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
MeasurementAxis axis_from_param(const UnitaryAxisParam& p);

// V = t I + i y . sigma as a matrix.
CMatrix unitary_from_param(const UnitaryAxisParam& p);

enum class BasisStructure { General, LocalProduct, SameLocal };

// A complete rank-1 projector set {|u_k><u_k|}, stored as the unitary frame
// whose columns are the |u_k>. LocalProduct and SameLocal carry their factor
// frames so the product structure is never lost.
class ProjectorBasis {
 public:
  static ProjectorBasis general(CMatrix frame);
  static ProjectorBasis computational(std::size_t d);
  static ProjectorBasis product(const ProjectorBasis& a, const ProjectorBasis& b);
  // Both factors measured in the same local frame: joint frame V (x) V.
  static ProjectorBasis same_local(CMatrix local_frame);

  std::size_t dim() const { return frame_.rows(); }
  const CMatrix& frame() const { return frame_; }
  BasisStructure structure() const { return structure_; }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const CMatrix& factor_a() const;
  const CMatrix& factor_b() const;

  CMatrix projector(std::size_t k) const;  // |u_k><u_k|

 private:
  ProjectorBasis(CMatrix frame, BasisStructure s) : frame_(std::move(frame)), structure_(s) {}
  static void check_frame(const CMatrix& frame, double tol);

  CMatrix frame_;
  BasisStructure structure_;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  std::vector<CMatrix> factors_;
};

// Eigenbasis {|u_+>, |u_->} of n . sigma for a unit axis n (1e-6 slack on
// the norm).
ProjectorBasis qubit_basis_from_axis(const MeasurementAxis& n);

ProjectorBasis product_basis(const ProjectorBasis& a, const ProjectorBasis& b);

// Dephasing channel: sum_k P_k rho P_k. Preserves the diagonal in the basis
// frame and kills everything else.
DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectorBasis& basis);

// Outcome distribution <u_k| rho |u_k>; clamps tiny negatives from roundoff.
std::vector<double> outcome_probabilities(const DensityMatrix& rho, const ProjectorBasis& basis);

// Shannon entropy in bits; terms with p < 1e-12 contribute zero.
double shannon_entropy(const std::vector<double>& p);

// S(rho) = -tr(rho log2 rho), eigenvalues below 1e-12 dropped.
double von_neumann_entropy(const DensityMatrix& rho);

// S(sum_k P_k rho P_k) - S(rho). For a complete rank-1 set the first term is
// the Shannon entropy of the outcome distribution, which is how it is
// computed; the measured state is never formed.
double basis_entropy(const DensityMatrix& rho, const ProjectorBasis& basis);

// Same quantity with S(rho) supplied by the caller; the optimizers use this
// to avoid re-diagonalizing rho at every step.
double basis_entropy_given(const DensityMatrix& rho, const ProjectorBasis& basis,
                           double entropy_of_rho);

}  // namespace bentropy
