#include "bentropy/tracers.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace bentropy {

namespace {

double xlog2(double x) { return x < 1e-12 ? 0.0 : x * std::log2(x); }

// (cos, sin) of (2k+1) theta/2 from exact base values c0 = cos(theta/2),
// s0 = sin(theta/2) = 2^{-n/2}, via binary exponentiation of the unit
// complex number (c0, s0). Avoids an asin/sin round trip so k = 0
// reproduces s0 exactly.
std::pair<double, double> half_angle_power(double c0, double s0, long odd_power) {
  double cr = 1.0, sr = 0.0;      // accumulated rotation
  double cb = c0, sb = s0;         // base^(2^bit)
  long e = odd_power;
  while (e > 0) {
    if (e & 1) {
      double c = cr * cb - sr * sb;
      double s = cr * sb + sr * cb;
      cr = c;
      sr = s;
    }
    double c2 = cb * cb - sb * sb;
    double s2 = 2.0 * cb * sb;
    cb = c2;
    sb = s2;
    e >>= 1;
  }
  return {cr, sr};
}

}  // namespace

double GroverConfig::theta() const { return 2.0 * std::asin(std::pow(2.0, -0.5 * n)); }

int GroverConfig::optimal_iterations() const {
  // Guarded ceil: at n = 2 the real solution is exactly 1 and must not be
  // bumped to 2 by roundoff in pi/asin.
  double x = std::numbers::pi / (2.0 * theta()) - 0.5;
  return static_cast<int>(std::ceil(x - 1e-9));
}

int GroverConfig::approx_optimal_iterations() const {
  return static_cast<int>(std::ceil(std::numbers::pi * std::pow(2.0, 0.5 * n) / 4.0));
}

void GroverConfig::validate() const {
  if (n < 1 || n > 40) throw std::invalid_argument("GroverConfig: n must lie in [1, 40]");
  if (n < 64 && marked >= (1ull << n))
    throw std::invalid_argument("GroverConfig: marked index out of range");
  if (iterations < 0) throw std::invalid_argument("GroverConfig: iterations must be >= 0");
}

TraceRecord grover_closed_form(const GroverConfig& cfg) {
  cfg.validate();
  double s0 = (cfg.n % 2 == 0) ? std::ldexp(1.0, -cfg.n / 2)
                               : std::sqrt(std::ldexp(1.0, -cfg.n));
  double c0 = std::sqrt(1.0 - std::ldexp(1.0, -cfg.n));
  auto [ct, st] = half_angle_power(c0, s0, 2L * cfg.iterations + 1);
  double p = st * st;
  double miss = 1.0 - p;

  // Split the log so the k = 0 case stays exact: (1-P)/(2^n - 1) = 2^-n.
  double others = std::ldexp(1.0, cfg.n) - 1.0;
  double be = -(miss * std::log2(miss / others)) - xlog2(p);
  if (miss < 1e-12) be = -xlog2(p);
  return {cfg.iterations, be, p};
}

TraceRecord grover_statevector(const GroverConfig& cfg) {
  cfg.validate();
  if (cfg.n > 12)
    throw std::invalid_argument("grover_statevector: n must be <= 12");

  const std::size_t size = 1ull << cfg.n;
  std::vector<double> amp(size, 1.0 / std::sqrt(static_cast<double>(size)));

  for (int k = 0; k < cfg.iterations; ++k) {
    amp[cfg.marked] = -amp[cfg.marked];
    double mean = std::accumulate(amp.begin(), amp.end(), 0.0) / static_cast<double>(size);
    for (auto& a : amp) a = 2.0 * mean - a;
  }

  double be = 0.0;
  for (double a : amp) be -= xlog2(a * a);
  return {cfg.iterations, be, amp[cfg.marked] * amp[cfg.marked]};
}

std::vector<TraceRecord> grover_trace(int n, int k_first, int k_last) {
  if (k_first < 0 || k_last < k_first)
    throw std::invalid_argument("grover_trace: need 0 <= k_first <= k_last");
  std::vector<TraceRecord> rows;
  rows.reserve(static_cast<std::size_t>(k_last - k_first) + 1);
  for (int k = k_first; k <= k_last; ++k)
    rows.push_back(grover_closed_form({.n = n, .marked = 0, .iterations = k}));
  return rows;
}

long ShorConfig::order() const {
  long r = 1;
  long v = base % modulus;
  while (v != 1) {
    v = (v * base) % modulus;
    ++r;
    if (r > modulus) throw std::logic_error("ShorConfig: order not found (base not coprime?)");
  }
  return r;
}

void ShorConfig::validate() const {
  if (modulus < 2 || modulus > 64)
    throw std::invalid_argument("ShorConfig: modulus must lie in [2, 64]");
  if (base < 2 || base >= modulus)
    throw std::invalid_argument("ShorConfig: base must lie in [2, modulus)");
  if (std::gcd(base, modulus) != 1)
    throw std::invalid_argument("ShorConfig: base and modulus must be coprime");
  if (t_qubits < 1 || t_qubits > 12)
    throw std::invalid_argument("ShorConfig: t_qubits must lie in [1, 12]");
  if ((1L << l_qubits) < modulus)
    throw std::invalid_argument("ShorConfig: 2^l_qubits must be >= modulus");
}

std::vector<TraceRecord> shor_first_register_trace(const ShorConfig& cfg) {
  cfg.validate();
  const std::size_t t_size = 1ull << cfg.t_qubits;
  const std::size_t l_size = 1ull << cfg.l_qubits;

  // The joint state stays pure throughout, so the basis entropy of the
  // first-register measurement {|j><j| (x) I} is the Shannon entropy of the
  // first-register outcome distribution.
  auto register_record = [&](const std::vector<complex>& psi, int step) {
    std::vector<double> p(t_size, 0.0);
    for (std::size_t j = 0; j < t_size; ++j)
      for (std::size_t k = 0; k < l_size; ++k) p[j] += std::norm(psi[j * l_size + k]);
    double be = 0.0;
    int support = 0;
    for (double x : p) {
      be -= xlog2(x);
      if (x > 1e-12) ++support;
    }
    return TraceRecord{step, be, static_cast<double>(support)};
  };

  std::vector<TraceRecord> rows;

  // Step 2: uniform superposition on the first register, |1> on the second.
  std::vector<complex> psi(t_size * l_size, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(t_size));
  for (std::size_t j = 0; j < t_size; ++j) psi[j * l_size + 1] = amp;
  rows.push_back(register_record(psi, 2));

  // Step 3: modular exponentiation |j>|1> -> |j>|base^j mod modulus>.
  std::vector<complex> psi3(t_size * l_size, 0.0);
  std::size_t power = 1 % static_cast<std::size_t>(cfg.modulus);
  for (std::size_t j = 0; j < t_size; ++j) {
    psi3[j * l_size + power] = amp;
    power = (power * static_cast<std::size_t>(cfg.base)) % static_cast<std::size_t>(cfg.modulus);
  }
  rows.push_back(register_record(psi3, 3));

  // Step 4: inverse Fourier transform on the first register.
  std::vector<complex> psi4(t_size * l_size, 0.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(t_size));
  const double w = -2.0 * std::numbers::pi / static_cast<double>(t_size);
  for (std::size_t k = 0; k < l_size; ++k) {
    for (std::size_t m = 0; m < t_size; ++m) {
      complex acc = 0.0;
      for (std::size_t j = 0; j < t_size; ++j) {
        complex a = psi3[j * l_size + k];
        if (a == complex(0.0)) continue;
        acc += a * std::polar(1.0, w * static_cast<double>(j * m));
      }
      psi4[m * l_size + k] = norm * acc;
    }
  }
  rows.push_back(register_record(psi4, 4));

  return rows;
}

std::vector<DecoherenceStep> decohere_sequence(const DensityMatrix& rho,
                                               const std::vector<ProjectorBasis>& bases) {
  std::vector<DecoherenceStep> steps;
  steps.reserve(bases.size());
  DensityMatrix current = rho;
  double entropy = von_neumann_entropy(current);
  int index = 1;
  for (const ProjectorBasis& basis : bases) {
    double step_be = basis_entropy_given(current, basis, entropy);
    current = apply_measurement(current, basis);
    entropy = von_neumann_entropy(current);
    steps.push_back({current, {index++, step_be, entropy}});
  }
  return steps;
}

DensityMatrix decoherence_example_state() {
  double r = std::sqrt(3.0) / 4.0;
  return DensityMatrix::validated(CMatrix::from_rows({{0.75, r}, {r, 0.25}}));
}

CMatrix decoherence_example_state_raw() {
  double r = std::sqrt(3.0) / 2.0;
  return CMatrix::from_rows({{0.75, r}, {r, 0.25}});
}

}  // namespace bentropy
