#pragma once

#include <cstdint>
#include <vector>

#include "bentropy/measure.hpp"

namespace bentropy {

// One row of an algorithm trace. auxiliary carries the success probability
// for the search tracer, the count of outcomes with nonzero probability for
// the period-finding tracer, and the running total entropy for the
// decoherence sequencer.
struct TraceRecord {
  int step_index = 0;
  double basis_entropy = 0.0;
  double auxiliary = 0.0;
};

// Search over 2^n items with one marked element. The rotation angle per
// iteration is theta = 2 asin(2^{-n/2}).
struct GroverConfig {
  int n = 0;
  std::uint64_t marked = 0;
  int iterations = 0;

  double theta() const;
  // Smallest k with (2k+1) theta/2 >= pi/2: ceil(pi/(2 theta) - 1/2).
  // The success probability peaks here and decreases after.
  int optimal_iterations() const;
  // The sqrt-rule estimate ceil(pi sqrt(2^n) / 4). One more than
  // optimal_iterations for n = 20; used as the default trace extent.
  int approx_optimal_iterations() const;

  void validate() const;  // 1 <= n <= 40, marked < 2^n, iterations >= 0
};

// After k iterations the marked amplitude is sin((2k+1) theta/2) and the
// 2^n - 1 others share cos^2 evenly, so with P = sin^2:
//   basis entropy = -[(1-P) log2((1-P)/(2^n-1)) + P log2 P]
// (pure state, so the measured entropy is the whole value), and at k = 0 the
// identity (1 - 2^-n)/(2^n - 1) = 2^-n makes it exactly n.
// The angle is evaluated by binary powers of (cos(theta/2), sin(theta/2)),
// whose base values are exact binary fractions for even n.
TraceRecord grover_closed_form(const GroverConfig& cfg);

// Direct simulation on the 2^n amplitude vector (n <= 12): oracle = sign
// flip on the marked index, diffusion = reflection about the mean.
TraceRecord grover_statevector(const GroverConfig& cfg);

// Closed-form rows for k in [k_first, k_last].
std::vector<TraceRecord> grover_trace(int n, int k_first, int k_last);

// Order finding for base^j mod modulus, t-qubit first register, second
// register of l_qubits (2^l >= modulus). Records the basis entropy of the
// first-register measurement {|j><j| (x) I} after superposition (step 2),
// modular exponentiation (step 3) and the inverse Fourier transform
// (step 4): t, t, log2(order) when the order divides 2^t.
struct ShorConfig {
  long modulus = 15;
  long base = 7;
  int t_qubits = 8;
  int l_qubits = 4;

  long order() const;     // multiplicative order of base mod modulus
  void validate() const;  // gcd = 1, 2^l >= modulus, t <= 12, modulus <= 64
};

std::vector<TraceRecord> shor_first_register_trace(const ShorConfig& cfg);

struct DecoherenceStep {
  DensityMatrix state;
  TraceRecord record;
};

// Repeated dephasing: each step applies one basis and records the entropy
// it adds (basis entropy of the current state under that basis, always
// nonnegative). auxiliary holds S(state) after the step.
std::vector<DecoherenceStep> decohere_sequence(const DensityMatrix& rho,
                                               const std::vector<ProjectorBasis>& bases);

// The valid pure state used by the decoherence walk-through:
// [[3/4, sqrt3/4], [sqrt3/4, 1/4]].
DensityMatrix decoherence_example_state();

// The matrix as originally printed, off-diagonal sqrt3/2. Not positive
// semidefinite; DensityMatrix::validated rejects it.
CMatrix decoherence_example_state_raw();

}  // namespace bentropy
