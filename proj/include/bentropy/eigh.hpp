#pragma once

#include <vector>

#include "bentropy/cmatrix.hpp"

namespace bentropy {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // columns, same order as eigenvalues
};

// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
//
// Each sweep annihilates every off-diagonal pair (p,q) with a unitary
// rotation in the (p,q) plane; convergence is quadratic once the matrix is
// nearly diagonal. The sweep order is fixed, so results are deterministic.
// O(D^3) per sweep with small constants, which is plenty at the dimensions
// this library targets (D <= 2^12).
//
// Throws std::invalid_argument for non-square input and input whose
// hermiticity defect exceeds 1e-10.
EigenDecomposition eigh(const CMatrix& a);

}  // namespace bentropy
