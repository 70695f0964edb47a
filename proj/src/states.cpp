#include "bentropy/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bentropy {

double BlochVector::norm() const { return std::sqrt(a * a + b * b + c * c); }

std::array<double, 4> BellDiagonalParams::eigenvalues() const {
  return {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4,
          (1 + c1 + c2 - c3) / 4};
}

bool BellDiagonalParams::is_physical(double tol) const {
  for (double l : eigenvalues())
    if (l < -tol) return false;
  return true;
}

const CMatrix& pauli(int i) {
  static const CMatrix s1 = CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  static const CMatrix s2 =
      CMatrix::from_rows({{0.0, complex(0.0, -1.0)}, {complex(0.0, 1.0), 0.0}});
  static const CMatrix s3 = CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  switch (i) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
  }
  throw std::invalid_argument("pauli: index must be 1, 2 or 3");
}

DensityMatrix from_bloch(const BlochVector& v) {
  double n = v.norm();
  if (n > 0.5 + 1e-12) {
    std::ostringstream os;
    os << "from_bloch: vector length " << n << " exceeds 1/2";
    throw std::invalid_argument(os.str());
  }
  CMatrix m = 0.5 * CMatrix::identity(2);
  m += v.a * pauli(1) + v.b * pauli(2) + v.c * pauli(3);
  return DensityMatrix::validated(std::move(m));
}

BlochVector bloch_of(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("bloch_of: state is not a qubit");
  BlochVector v;
  v.a = 0.5 * (rho.matrix() * pauli(1)).trace().real();
  v.b = 0.5 * (rho.matrix() * pauli(2)).trace().real();
  v.c = 0.5 * (rho.matrix() * pauli(3)).trace().real();
  return v;
}

DensityMatrix bell() {
  CMatrix m(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix::validated(std::move(m));
}

DensityMatrix werner(double z) {
  if (z < -1e-12 || z > 1.0 + 1e-12)
    throw std::invalid_argument("werner: parameter must lie in [0, 1]");
  CMatrix m = ((1.0 - z) / 4.0) * CMatrix::identity(4);
  CMatrix phi(4, 4);
  phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = 0.5;
  m += z * phi;
  return DensityMatrix::validated(std::move(m));
}

DensityMatrix bell_diagonal(const BellDiagonalParams& p) {
  if (!p.is_physical())
    throw std::invalid_argument(
        "bell_diagonal: coefficients give a negative eigenvalue (unphysical)");
  CMatrix m = 0.25 * CMatrix::identity(4);
  m += 0.25 * p.c1 * kron(pauli(1), pauli(1));
  m += 0.25 * p.c2 * kron(pauli(2), pauli(2));
  m += 0.25 * p.c3 * kron(pauli(3), pauli(3));
  return DensityMatrix::validated(std::move(m));
}

BellDiagonalParams correlation_params_of(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("correlation_params_of: state is not two qubits");
  BellDiagonalParams p;
  p.c1 = (rho.matrix() * kron(pauli(1), pauli(1))).trace().real();
  p.c2 = (rho.matrix() * kron(pauli(2), pauli(2))).trace().real();
  p.c3 = (rho.matrix() * kron(pauli(3), pauli(3))).trace().real();
  return p;
}

DensityMatrix asymmetric_discord_state() {
  CMatrix m(4, 4);
  m(0, 0) = 0.5;
  m(2, 2) = m(2, 3) = m(3, 2) = m(3, 3) = 0.25;
  return DensityMatrix::validated(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t d) {
  if (d == 0) throw std::invalid_argument("maximally_mixed: dimension must be positive");
  CMatrix m = (1.0 / static_cast<double>(d)) * CMatrix::identity(d);
  return DensityMatrix::validated(std::move(m));
}

}  // namespace bentropy
