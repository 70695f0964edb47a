#pragma once

#include <array>
#include <span>
#include <vector>

#include "bentropy/extremal.hpp"
#include "bentropy/measure.hpp"
#include "bentropy/states.hpp"

namespace bentropy {

enum class MeasuredSide { MeasureA, MeasureB };

struct DiscordResult {
  double delta = 0.0;               // I - J, nonnegative up to tolerance
  MeasuredSide side;
  MeasurementAxis optimal_axis;     // axis attaining the conditional-entropy minimum
  double mutual_information = 0.0;  // I = S(A) + S(B) - S(AB)
  double measured_mutual = 0.0;     // J = S(unmeasured) - min_axis S(.|outcome)
  bool converged = false;
};

// I(A:B) = S(A) + S(B) - S(AB) for a bipartite state laid out as A (x) B.
double mutual_information(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b);

// Average post-measurement entropy of the unmeasured qubit:
// sum_b p_b S(rho_{other|b}) with p_b = tr[(Pi_b on side) rho]. Two-qubit
// states only; the axis fixes the projector pair on the measured side.
double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementAxis& axis,
                                    MeasuredSide side);

// delta(A:B) = S(B) - S(AB) + min_axis S(A | Pi^B) for side MeasureB, and
// with roles swapped for MeasureA. The minimum is found by multistart
// simplex descent over the measurement axis.
DiscordResult discord_variational(const DensityMatrix& rho, MeasuredSide side,
                                  OptimizerConfig cfg = {.starts = 32});

// Closed-form discord of a state with maximally mixed marginals:
//   (1/4) sum over the four sign patterns of (1 -+ c1 -+ c2 -+ c3) log2(...)
//   - (1-c)/2 log2(1-c) - (1+c)/2 log2(1+c),  c = max_i |c_i|.
double luo_discord(const BellDiagonalParams& p);

struct DiscordDetection {
  bool discord_present = false;
  double min_basis_entropy = 0.0;
};

// Nonzero minimum basis entropy over product-local bases witnesses discord;
// threshold 1e-4 separates "zero up to optimizer noise" from "present".
DiscordDetection detect_discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

// Rows (z, luo_discord, optimizer min basis entropy over SameLocal) for the
// one-parameter family (1-z) I/4 + z |Phi+><Phi+|.
std::vector<std::array<double, 3>> werner_sweep(std::span<const double> z_values,
                                                const OptimizerConfig& cfg = {});

}  // namespace bentropy
