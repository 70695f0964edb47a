#include <doctest.h>

#include <cmath>
#include <vector>

#include "bentropy/extremal.hpp"
#include "bentropy/rng.hpp"
#include "bentropy/states.hpp"
#include "bentropy/tracers.hpp"

using namespace bentropy;

namespace {
constexpr double kH14 = 0.8112781244591328;  // binary entropy of 1/4
}

TEST_SUITE("tracers") {

TEST_CASE("search trace starts at entropy n exactly") {
  for (int n : {2, 4, 10, 20}) {
    TraceRecord r = grover_closed_form({.n = n, .marked = 0, .iterations = 0});
    CHECK(r.basis_entropy == static_cast<double>(n));
    CHECK(r.auxiliary == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-15));
  }
  for (int n : {3, 5}) {
    TraceRecord r = grover_closed_form({.n = n, .marked = 0, .iterations = 0});
    CHECK(std::abs(r.basis_entropy - n) <= 1e-12);
  }
}

TEST_CASE("optimal iteration counts") {
  CHECK(GroverConfig{.n = 2}.optimal_iterations() == 1);
  CHECK(GroverConfig{.n = 4}.optimal_iterations() == 3);
  CHECK(GroverConfig{.n = 10}.optimal_iterations() == 25);
  CHECK(GroverConfig{.n = 20}.optimal_iterations() == 804);

  CHECK(GroverConfig{.n = 2}.approx_optimal_iterations() == 2);
  CHECK(GroverConfig{.n = 4}.approx_optimal_iterations() == 4);
  CHECK(GroverConfig{.n = 10}.approx_optimal_iterations() == 26);
  CHECK(GroverConfig{.n = 20}.approx_optimal_iterations() == 805);
}

TEST_CASE("closed form agrees with the statevector simulation") {
  for (int n = 4; n <= 10; ++n) {
    int k_max = GroverConfig{.n = n}.optimal_iterations();
    for (int k = 0; k <= k_max; ++k) {
      GroverConfig cfg{.n = n, .marked = (1u << n) - 1, .iterations = k};
      TraceRecord closed = grover_closed_form(cfg);
      TraceRecord sim = grover_statevector(cfg);
      CHECK(std::abs(closed.basis_entropy - sim.basis_entropy) <= 1e-9);
      CHECK(std::abs(closed.auxiliary - sim.auxiliary) <= 1e-12);
    }
  }
}

TEST_CASE("success probability follows the rotation angle") {
  GroverConfig cfg{.n = 4, .marked = 5, .iterations = 3};
  double theta = 2.0 * std::asin(0.25);
  double expect = std::sin(3.5 * theta);
  expect *= expect;
  CHECK(std::abs(grover_closed_form(cfg).auxiliary - expect) <= 1e-12);
  CHECK(cfg.theta() == doctest::Approx(theta).epsilon(1e-15));
}

TEST_CASE("large search is monotone up to the peak then overshoots") {
  auto rows = grover_trace(20, 0, 805);
  REQUIRE(rows.size() == 806);
  for (int k = 0; k < 804; ++k) CHECK(rows[k + 1].auxiliary > rows[k].auxiliary);
  CHECK(rows[805].auxiliary < rows[804].auxiliary);
  CHECK(rows[805].auxiliary >= 0.999);
  CHECK(rows[805].basis_entropy <= 1e-3);
  for (const auto& r : rows) {
    CHECK(r.basis_entropy >= 0.0);
    CHECK(r.auxiliary >= 0.0);
    CHECK(r.auxiliary <= 1.0);
  }
}

TEST_CASE("trace bounds and config validation") {
  auto rows = grover_trace(2, 0, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].step_index == 0);
  CHECK(rows[1].step_index == 1);
  CHECK(rows[1].auxiliary == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(grover_trace(4, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(grover_statevector({.n = 13, .marked = 0, .iterations = 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroverConfig{.n = 0}.validate(), std::invalid_argument);
  CHECK_THROWS_AS(GroverConfig{.n = 41}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((GroverConfig{.n = 2, .marked = 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GroverConfig{.n = 2, .marked = 0, .iterations = -1}.validate()),
                  std::invalid_argument);
}

TEST_CASE("period finding trace for the worked example") {
  ShorConfig cfg;
  CHECK(cfg.order() == 4);

  auto rows = shor_first_register_trace(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].step_index == 2);
  CHECK(rows[1].step_index == 3);
  CHECK(rows[2].step_index == 4);
  CHECK(std::abs(rows[0].basis_entropy - 8.0) <= 1e-9);
  CHECK(std::abs(rows[1].basis_entropy - 8.0) <= 1e-9);
  CHECK(std::abs(rows[2].basis_entropy - 2.0) <= 1e-9);
  CHECK(rows[0].auxiliary == 256.0);
  CHECK(rows[1].auxiliary == 256.0);
  CHECK(rows[2].auxiliary == 4.0);
}

TEST_CASE("period finding config validation") {
  CHECK_THROWS_AS((ShorConfig{.modulus = 15, .base = 5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ShorConfig{.modulus = 15, .base = 7, .t_qubits = 8, .l_qubits = 3}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((ShorConfig{.modulus = 65}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ShorConfig{.modulus = 15, .base = 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ShorConfig{.modulus = 15, .base = 7, .t_qubits = 13}.validate()),
                  std::invalid_argument);
}

TEST_CASE("dephasing walk-through reaches the maximally mixed state") {
  DensityMatrix rho = decoherence_example_state();
  std::vector<ProjectorBasis> bases{qubit_basis_from_axis({0, 0, 1}),
                                    qubit_basis_from_axis({0, 1, 0})};
  auto steps = decohere_sequence(rho, bases);
  REQUIRE(steps.size() == 2);

  CHECK(steps[0].record.basis_entropy == doctest::Approx(kH14).epsilon(1e-12));
  CHECK(steps[0].record.auxiliary == doctest::Approx(kH14).epsilon(1e-12));
  CHECK(std::abs(steps[0].state.matrix()(0, 0).real() - 0.75) <= 1e-12);
  CHECK(std::abs(steps[0].state.matrix()(0, 1)) <= 1e-12);

  CHECK(steps[1].record.basis_entropy == doctest::Approx(1.0 - kH14).epsilon(1e-12));
  CHECK(steps[1].record.auxiliary == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(steps[1].state.matrix(), maximally_mixed(2).matrix()) <= 1e-12);
  CHECK(classify_purity(steps[1].state, {.starts = 8}) == PurityClass::MaximallyMixed);

  auto more = decohere_sequence(steps[1].state, {qubit_basis_from_axis({0, 0, 1})});
  CHECK(std::abs(more[0].record.basis_entropy) <= 1e-9);
}

TEST_CASE("the as-printed walk-through matrix is not a state") {
  CMatrix raw = decoherence_example_state_raw();
  CHECK(std::abs(raw(0, 1).real() - std::sqrt(3.0) / 2.0) <= 1e-15);
  CHECK_THROWS_AS(DensityMatrix::validated(raw), ValidationError);
  try {
    DensityMatrix::validated(decoherence_example_state_raw());
  } catch (const ValidationError& e) {
    CHECK(e.kind() == DensityError::NotPositiveSemidefinite);
  }
}

TEST_CASE("every dephasing step adds entropy") {
  CounterRng rng(42, 61);
  for (int trial = 0; trial < 20; ++trial) {
    double a = rng.normal(), b = rng.normal(), c = rng.normal();
    double n = std::sqrt(a * a + b * b + c * c);
    double r = 0.5 * rng.uniform();
    DensityMatrix rho = from_bloch({a / n * r, b / n * r, c / n * r});

    std::vector<ProjectorBasis> bases;
    for (int s = 0; s < 5; ++s) {
      double x = rng.normal(), y = rng.normal(), z = rng.normal();
      double m = std::sqrt(x * x + y * y + z * z);
      if (m < 1e-9) {
        x = 1;
        m = 1;
      }
      bases.push_back(qubit_basis_from_axis({x / m, y / m, z / m}));
    }

    auto steps = decohere_sequence(rho, bases);
    REQUIRE(steps.size() == 5);
    double prev_total = von_neumann_entropy(rho);
    for (const auto& step : steps) {
      CHECK(step.record.basis_entropy >= -1e-10);
      CHECK(step.record.auxiliary >= prev_total - 1e-12);
      // The entropy a step adds is exactly the growth of the running total.
      CHECK(std::abs(step.record.basis_entropy - (step.record.auxiliary - prev_total)) <= 1e-9);
      prev_total = step.record.auxiliary;
    }
  }
}

}  // TEST_SUITE
