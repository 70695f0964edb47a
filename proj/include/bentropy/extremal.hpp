#pragma once

#include <span>

#include "bentropy/measure.hpp"
#include "bentropy/optimize.hpp"
#include "bentropy/states.hpp"

namespace bentropy {

// Search space for the extremal-entropy optimizers.
//
//   GeneralRank1(D)      all complete rank-1 bases of a D-dimensional system;
//                        parameterized by a Givens rotation (angle + phase)
//                        for every coordinate pair: D(D-1) parameters.
//   ProductLocal(dA,dB)  independent local bases on a bipartite system,
//                        dA(dA-1) + dB(dB-1) parameters (4 for two qubits).
//   SameLocal(d)         the same local basis on both factors, d(d-1) params.
class BasisClass {
 public:
  enum class Kind { GeneralRank1, ProductLocal, SameLocal };

  static BasisClass general_rank1(std::size_t d);
  static BasisClass product_local(std::size_t da, std::size_t db);
  static BasisClass same_local(std::size_t d);

  Kind kind() const { return kind_; }
  std::size_t dim() const;             // joint dimension
  std::size_t parameter_count() const;
  ProjectorBasis build(std::span<const double> params) const;

 private:
  BasisClass(Kind k, std::size_t da, std::size_t db) : kind_(k), da_(da), db_(db) {}
  Kind kind_;
  std::size_t da_, db_;
};

struct ExtremalResult {
  double value = 0.0;
  ProjectorBasis basis;
  int starts_used = 0;
  bool converged = false;
};

// Largest basis entropy over the class. The multistart simplex search is
// joined by one deterministic candidate for GeneralRank1: the Fourier
// rotation of the eigenbasis, which yields uniform outcomes and therefore
// the value log2(D) - S(rho). The reported value is always recomputed as
// basis_entropy(rho, basis) on the winning frame.
ExtremalResult max_basis_entropy(const DensityMatrix& rho, const BasisClass& cls,
                                 const OptimizerConfig& cfg = {});

// Smallest basis entropy over the class. For GeneralRank1 the eigenbasis of
// rho commutes with the measurement, so the minimum is 0 there and is
// returned directly (starts_used = 0).
ExtremalResult min_basis_entropy(const DensityMatrix& rho, const BasisClass& cls,
                                 const OptimizerConfig& cfg = {});

// A unit axis orthogonal to the Bloch vector; measuring along it maximizes
// the measured entropy of a qubit state (basis entropy 1 - S(rho)).
// Deterministic pick: normalize (-c, 0, a), sign-flipped so the first
// nonzero component is positive; (0, b, 0) maps to (1, 0, 0) and the zero
// vector to (0, 0, 1).
MeasurementAxis orthogonal_axis_witness(const BlochVector& v);

// Closed-form unitary parameter (t, 0, y2, y2) whose induced axis is
// orthogonal to the Bloch vector (a, b, c), so the measured state is I/2.
// Domain: a^4 - 2 a^2 b c >= 0 and a*c != 0; violations throw
// std::invalid_argument naming the offending subexpression.
UnitaryAxisParam uniform_outcome_param(double a, double b, double c);

// Minimum basis entropy of a two-qubit state with maximally mixed marginals
// over SameLocal bases, in closed form: the measured state has eigenvalues
// (1 pm c)/4 twice each with c = max_i |c_i|, so the value is
// S(measured) - S(rho) evaluated on those spectra.
double bell_diagonal_min_basis_entropy(const BellDiagonalParams& p);

enum class PurityClass { Pure, Mixed, MaximallyMixed };
const char* to_string(PurityClass c);

// Pure iff the maximal basis entropy reaches log2(D) within 1e-6;
// MaximallyMixed iff it is below 1e-6; Mixed otherwise.
PurityClass classify_purity(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace bentropy
