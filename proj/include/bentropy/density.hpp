#pragma once

#include <stdexcept>
#include <string>

#include "bentropy/cmatrix.hpp"

namespace bentropy {

enum class DensityError { NotHermitian, TraceNotOne, NotPositiveSemidefinite };

class ValidationError : public std::runtime_error {
 public:
  ValidationError(DensityError kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DensityError kind() const { return kind_; }

 private:
  DensityError kind_;
};

const char* to_string(DensityError e);

// A square complex matrix that has passed the physical-state checks:
// Hermitian within 1e-10, trace 1 within 1e-10, eigenvalues >= -1e-10.
// Construction goes through validated(), so holding a DensityMatrix is
// proof the checks ran.
class DensityMatrix {
 public:
  // Validates and returns the state, or throws ValidationError naming the
  // violated invariant and the offending quantity.
  static DensityMatrix validated(CMatrix m);

  std::size_t dim() const { return mat_.rows(); }
  const CMatrix& matrix() const { return mat_; }
  const complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

 private:
  explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {}
  CMatrix mat_;
};

enum class Subsystem { A, B };

// Reduced state of one factor of a bipartite system laid out as A (x) B,
// i.e. joint index i = a*dim_b + b.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

}  // namespace bentropy
