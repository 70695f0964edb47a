#pragma once

#include <array>

#include "bentropy/density.hpp"

namespace bentropy {

// Single-qubit Bloch coordinates in the convention
//   rho = (1/2) I + a sigma1 + b sigma2 + c sigma3,
// so pure states sit at radius 1/2, not 1.
struct BlochVector {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double norm() const;
};

// Correlation coefficients of a two-qubit state with maximally mixed
// marginals: rho = (1/4)(I + sum_i c_i sigma_i (x) sigma_i).
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  // Spectrum of the corresponding state, ascending not guaranteed:
  // (1 -c1 -c2 -c3)/4, (1 -c1 +c2 +c3)/4, (1 +c1 -c2 +c3)/4, (1 +c1 +c2 -c3)/4.
  std::array<double, 4> eigenvalues() const;
  bool is_physical(double tol = 1e-12) const;
};

const CMatrix& pauli(int i);  // i in {1,2,3}

// rho = (1/2) I + a sigma1 + b sigma2 + c sigma3. Throws std::invalid_argument
// if the vector length exceeds 1/2 (beyond validator slack).
DensityMatrix from_bloch(const BlochVector& v);

// Bloch coordinates of a qubit state: a = tr(rho sigma1)/2 etc.
BlochVector bloch_of(const DensityMatrix& rho);

DensityMatrix bell();  // |Phi+><Phi+|

// (1 - z) I/4 + z |Phi+><Phi+|, z in [0, 1].
DensityMatrix werner(double z);

DensityMatrix bell_diagonal(const BellDiagonalParams& p);

// Correlation coefficients tr(rho sigma_i (x) sigma_i) of a two-qubit state.
BellDiagonalParams correlation_params_of(const DensityMatrix& rho);

// Two-qubit state with one-sided discord:
// (1/4) [[2,0,0,0],[0,0,0,0],[0,0,1,1],[0,0,1,1]]
// = (1/2)|0><0| (x) |0><0| + (1/2)|1><1| (x) |+><+|.
DensityMatrix asymmetric_discord_state();

DensityMatrix maximally_mixed(std::size_t d);

}  // namespace bentropy
