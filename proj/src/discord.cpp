#include "bentropy/discord.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bentropy/eigh.hpp"

namespace bentropy {

namespace {

double xlog2(double x) { return x < 1e-12 ? 0.0 : x * std::log2(x); }

MeasurementAxis axis_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// sum_b p_b S(conditional of the unmeasured qubit), for projectors P_b on
// the measured side.
double conditional_entropy_for_projectors(const DensityMatrix& rho, const CMatrix& p_plus,
                                          const CMatrix& p_minus, MeasuredSide side) {
  const CMatrix eye = CMatrix::identity(2);
  double total = 0.0;
  for (const CMatrix* proj : {&p_plus, &p_minus}) {
    CMatrix big = (side == MeasuredSide::MeasureB) ? kron(eye, *proj) : kron(*proj, eye);
    CMatrix post = big * rho.matrix() * big;
    double p = post.trace().real();
    if (p < 1e-14) continue;

    // Reduced state of the unmeasured side, normalized by the outcome weight.
    CMatrix cond(2, 2);
    if (side == MeasuredSide::MeasureB) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          cond(i, j) = (post(2 * i, 2 * j) + post(2 * i + 1, 2 * j + 1)) / p;
    } else {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          cond(i, j) = (post(i, j) + post(2 + i, 2 + j)) / p;
    }

    EigenDecomposition eig = eigh(cond);
    double s = 0.0;
    for (double l : eig.eigenvalues) s -= xlog2(std::max(0.0, l));
    total += p * s;
  }
  return total;
}

}  // namespace

double mutual_information(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b) {
  DensityMatrix ra = partial_trace(rho, dim_a, dim_b, Subsystem::A);
  DensityMatrix rb = partial_trace(rho, dim_a, dim_b, Subsystem::B);
  return von_neumann_entropy(ra) + von_neumann_entropy(rb) - von_neumann_entropy(rho);
}

double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementAxis& axis,
                                    MeasuredSide side) {
  if (rho.dim() != 4)
    throw std::invalid_argument("measured_conditional_entropy: state is not two qubits");
  double len = axis.norm();
  if (std::abs(len - 1.0) > 1e-6)
    throw std::invalid_argument("measured_conditional_entropy: axis is not unit length");

  CMatrix ns = (axis.z1 / len) * pauli(1) + (axis.z2 / len) * pauli(2) + (axis.z3 / len) * pauli(3);
  CMatrix p_plus = 0.5 * (CMatrix::identity(2) + ns);
  CMatrix p_minus = 0.5 * (CMatrix::identity(2) - ns);
  return conditional_entropy_for_projectors(rho, p_plus, p_minus, side);
}

DiscordResult discord_variational(const DensityMatrix& rho, MeasuredSide side,
                                  OptimizerConfig cfg) {
  if (rho.dim() != 4)
    throw std::invalid_argument("discord_variational: state is not two qubits");

  DensityMatrix ra = partial_trace(rho, 2, 2, Subsystem::A);
  DensityMatrix rb = partial_trace(rho, 2, 2, Subsystem::B);
  double sa = von_neumann_entropy(ra);
  double sb = von_neumann_entropy(rb);
  double sab = von_neumann_entropy(rho);

  Objective objective = [&](std::span<const double> x) {
    return measured_conditional_entropy(rho, axis_from_angles(x[0], x[1]), side);
  };
  MultistartResult ms = multistart_minimize(objective, 2, 0.0, 2.0 * std::numbers::pi, cfg);
  MeasurementAxis best = axis_from_angles(ms.x[0], ms.x[1]);
  double min_cond = measured_conditional_entropy(rho, best, side);

  DiscordResult out;
  out.side = side;
  out.optimal_axis = best;
  out.mutual_information = sa + sb - sab;
  out.measured_mutual =
      (side == MeasuredSide::MeasureB) ? sa - min_cond : sb - min_cond;
  out.delta = out.mutual_information - out.measured_mutual;
  out.converged = ms.converged;
  return out;
}

double luo_discord(const BellDiagonalParams& p) {
  if (!p.is_physical())
    throw std::invalid_argument("luo_discord: unphysical coefficients");
  double c1 = p.c1, c2 = p.c2, c3 = p.c3;
  double c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  double bracket = xlog2(std::max(0.0, 1 - c1 - c2 - c3)) + xlog2(std::max(0.0, 1 - c1 + c2 + c3)) +
                   xlog2(std::max(0.0, 1 + c1 - c2 + c3)) + xlog2(std::max(0.0, 1 + c1 + c2 - c3));
  return bracket / 4.0 - 0.5 * xlog2(1.0 - c) - 0.5 * xlog2(1.0 + c);
}

DiscordDetection detect_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  if (rho.dim() != 4) throw std::invalid_argument("detect_discord: state is not two qubits");
  ExtremalResult r = min_basis_entropy(rho, BasisClass::product_local(2, 2), cfg);
  return {r.value > 1e-4, r.value};
}

std::vector<std::array<double, 3>> werner_sweep(std::span<const double> z_values,
                                                const OptimizerConfig& cfg) {
  std::vector<std::array<double, 3>> rows;
  rows.reserve(z_values.size());
  for (double z : z_values) {
    BellDiagonalParams p{z, -z, z};
    DensityMatrix rho = werner(z);
    ExtremalResult r = min_basis_entropy(rho, BasisClass::same_local(2), cfg);
    rows.push_back({z, luo_discord(p), r.value});
  }
  return rows;
}

}  // namespace bentropy
