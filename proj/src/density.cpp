#include "bentropy/density.hpp"

#include <cmath>
#include <sstream>

#include "bentropy/eigh.hpp"

namespace bentropy {

const char* to_string(DensityError e) {
  switch (e) {
    case DensityError::NotHermitian: return "NotHermitian";
    case DensityError::TraceNotOne: return "TraceNotOne";
    case DensityError::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
  }
  return "?";
}

DensityMatrix DensityMatrix::validated(CMatrix m) {
  if (!m.is_square() || m.rows() == 0)
    throw ValidationError(DensityError::NotHermitian, "state matrix must be square and nonempty");
  if (!m.all_finite())
    throw ValidationError(DensityError::NotHermitian, "state matrix has non-finite entries");

  double herm = hermiticity_defect(m);
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "NotHermitian: |rho - rho^dagger| reaches " << herm << " (limit 1e-10)";
    throw ValidationError(DensityError::NotHermitian, os.str());
  }

  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "TraceNotOne: trace = " << tr << " deviates from 1 by " << std::abs(tr - 1.0)
       << " (limit 1e-10)";
    throw ValidationError(DensityError::TraceNotOne, os.str());
  }

  EigenDecomposition eig = eigh(m);
  double min_ev = eig.eigenvalues.front();
  if (min_ev < -1e-10) {
    std::ostringstream os;
    os << "NotPositiveSemidefinite: smallest eigenvalue = " << min_ev << " (limit -1e-10)";
    throw ValidationError(DensityError::NotPositiveSemidefinite, os.str());
  }

  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (dim_a * dim_b != rho.dim())
    throw std::invalid_argument("partial_trace: dim_a * dim_b does not match state dimension");

  const CMatrix& m = rho.matrix();
  if (keep == Subsystem::A) {
    CMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j)
        for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return DensityMatrix::validated(std::move(out));
  }
  CMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l)
      for (std::size_t i = 0; i < dim_a; ++i) out(k, l) += m(i * dim_b + k, i * dim_b + l);
  return DensityMatrix::validated(std::move(out));
}

}  // namespace bentropy
