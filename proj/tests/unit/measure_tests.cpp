#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bentropy/eigh.hpp"
#include "bentropy/extremal.hpp"
#include "bentropy/measure.hpp"
#include "bentropy/rng.hpp"
#include "bentropy/states.hpp"

using namespace bentropy;

namespace {

DensityMatrix random_state(std::size_t d, CounterRng& rng) {
  CMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = complex(rng.normal(), rng.normal());
  CMatrix m = g * g.adjoint();
  m *= complex(1.0 / m.trace().real(), 0.0);
  return DensityMatrix::validated(std::move(m));
}

ProjectorBasis random_basis(std::size_t d, CounterRng& rng) {
  BasisClass cls = BasisClass::general_rank1(d);
  std::vector<double> params(cls.parameter_count());
  for (double& p : params) p = rng.uniform(0.0, 6.283185307179586);
  return cls.build(params);
}

constexpr double kH14 = 0.8112781244591328;  // binary entropy of 1/4

}  // namespace

TEST_SUITE("measure") {

TEST_CASE("axis_from_param matches the closed-form map") {
  MeasurementAxis z = axis_from_param({1, 0, 0, 0});
  CHECK(z.z1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z.z2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(z.z3 == doctest::Approx(1.0).epsilon(1e-15));

  MeasurementAxis flip = axis_from_param({0, 1, 0, 0});
  CHECK(flip.z3 == doctest::Approx(-1.0).epsilon(1e-15));

  const double pi = std::numbers::pi;
  const double c8 = std::cos(pi / 8), s8 = std::sin(pi / 8);
  MeasurementAxis tilt = axis_from_param({c8, s8, 0, 0});
  CHECK(tilt.z1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(tilt.z2 == doctest::Approx(std::sin(pi / 4)).epsilon(1e-14));
  CHECK(tilt.z3 == doctest::Approx(std::cos(pi / 4)).epsilon(1e-14));

  CHECK_THROWS_AS(axis_from_param({1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("axis_from_param output is always a unit vector") {
  CounterRng rng(42, 31);
  for (int trial = 0; trial < 100; ++trial) {
    double t = rng.normal(), y1 = rng.normal(), y2 = rng.normal(), y3 = rng.normal();
    double n = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
    if (n < 1e-6) continue;
    MeasurementAxis ax = axis_from_param({t / n, y1 / n, y2 / n, y3 / n});
    CHECK(ax.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("unitary_from_param conjugation reproduces the induced axis") {
  CounterRng rng(42, 32);
  for (int trial = 0; trial < 50; ++trial) {
    double t = rng.normal(), y1 = rng.normal(), y2 = rng.normal(), y3 = rng.normal();
    double n = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
    if (n < 1e-6) continue;
    UnitaryAxisParam p{t / n, y1 / n, y2 / n, y3 / n};
    CMatrix v = unitary_from_param(p);
    CHECK(max_abs_diff(v.adjoint() * v, CMatrix::identity(2)) <= 1e-12);
    // V sigma3 V^dagger = z . sigma for the axis the map reports.
    MeasurementAxis ax = axis_from_param(p);
    CMatrix lhs = v * pauli(3) * v.adjoint();
    CMatrix rhs = ax.z1 * pauli(1) + ax.z2 * pauli(2) + ax.z3 * pauli(3);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("qubit_basis_from_axis reproduces the named projector pairs") {
  ProjectorBasis zb = qubit_basis_from_axis({0, 0, 1});
  CHECK(max_abs_diff(zb.projector(0), CMatrix::from_rows({{1, 0}, {0, 0}})) <= 1e-12);
  CHECK(max_abs_diff(zb.projector(1), CMatrix::from_rows({{0, 0}, {0, 1}})) <= 1e-12);

  ProjectorBasis xb = qubit_basis_from_axis({1, 0, 0});
  CHECK(max_abs_diff(xb.projector(0), CMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}})) <= 1e-12);
  CHECK(max_abs_diff(xb.projector(1), CMatrix::from_rows({{0.5, -0.5}, {-0.5, 0.5}})) <= 1e-12);

  ProjectorBasis yb = qubit_basis_from_axis({0, 1, 0});
  CMatrix pp = CMatrix::from_rows({{complex(0.5, 0), complex(0, -0.5)},
                                   {complex(0, 0.5), complex(0.5, 0)}});
  CMatrix pm = CMatrix::from_rows({{complex(0.5, 0), complex(0, 0.5)},
                                   {complex(0, -0.5), complex(0.5, 0)}});
  CHECK(max_abs_diff(yb.projector(0), pp) <= 1e-12);
  CHECK(max_abs_diff(yb.projector(1), pm) <= 1e-12);

  // P_pm = (I pm n . sigma)/2 for random unit axes.
  CounterRng rng(42, 33);
  for (int trial = 0; trial < 30; ++trial) {
    double a = rng.normal(), b = rng.normal(), c = rng.normal();
    double n = std::sqrt(a * a + b * b + c * c);
    if (n < 1e-6) continue;
    MeasurementAxis ax{a / n, b / n, c / n};
    ProjectorBasis basis = qubit_basis_from_axis(ax);
    CMatrix ns = ax.z1 * pauli(1) + ax.z2 * pauli(2) + ax.z3 * pauli(3);
    CMatrix plus = 0.5 * (CMatrix::identity(2) + ns);
    CHECK(max_abs_diff(basis.projector(0), plus) <= 1e-12);
  }
}

TEST_CASE("product bases carry their factors and match the Kronecker frame") {
  ProjectorBasis cc = ProjectorBasis::product(ProjectorBasis::computational(2),
                                              ProjectorBasis::computational(2));
  CHECK(cc.structure() == BasisStructure::LocalProduct);
  CHECK(max_abs_diff(cc.frame(), CMatrix::identity(4)) <= 1e-15);

  ProjectorBasis zx = product_basis(qubit_basis_from_axis({0, 0, 1}),
                                    qubit_basis_from_axis({1, 0, 0}));
  CHECK(max_abs_diff(zx.frame(), kron(qubit_basis_from_axis({0, 0, 1}).frame(),
                                      qubit_basis_from_axis({1, 0, 0}).frame())) <= 1e-15);

  ProjectorBasis sl = ProjectorBasis::same_local(unitary_from_param({1, 0, 0, 0}));
  CHECK(sl.structure() == BasisStructure::SameLocal);
  CHECK(max_abs_diff(sl.frame(), CMatrix::identity(4)) <= 1e-15);
  CHECK(max_abs_diff(sl.factor_a(), sl.factor_b()) <= 1e-15);
}

TEST_CASE("apply_measurement dephases the Bell state to its corners") {
  ProjectorBasis cc = ProjectorBasis::product(ProjectorBasis::computational(2),
                                              ProjectorBasis::computational(2));
  DensityMatrix after = apply_measurement(bell(), cc);
  CHECK(after(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(after(3, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(after(0, 3)) <= 1e-14);
  CHECK(std::abs(after(1, 1)) <= 1e-14);
}

TEST_CASE("apply_measurement in an eigenbasis is the identity channel") {
  CounterRng rng(42, 34);
  for (int trial = 0; trial < 20; ++trial) {
    DensityMatrix rho = random_state(4, rng);
    ProjectorBasis eigen = ProjectorBasis::general(eigh(rho.matrix()).eigenvectors);
    CHECK(max_abs_diff(apply_measurement(rho, eigen).matrix(), rho.matrix()) <= 1e-10);
  }
}

TEST_CASE("measuring the dephased state along sigma2 flattens it") {
  DensityMatrix rho = DensityMatrix::validated(CMatrix::from_rows({{0.75, 0}, {0, 0.25}}));
  DensityMatrix after = apply_measurement(rho, qubit_basis_from_axis({0, 1, 0}));
  CHECK(max_abs_diff(after.matrix(), maximally_mixed(2).matrix()) <= 1e-12);
}

TEST_CASE("entropies of the standard examples") {
  CHECK(von_neumann_entropy(bell()) <= 1e-9);
  CHECK(von_neumann_entropy(maximally_mixed(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(maximally_mixed(4)) == doctest::Approx(2.0).epsilon(1e-12));
  DensityMatrix diag = DensityMatrix::validated(CMatrix::from_rows({{0.75, 0}, {0, 0.25}}));
  CHECK(von_neumann_entropy(diag) == doctest::Approx(kH14).epsilon(1e-12));

  std::vector<double> p{0.5, 0.5, 0.0};
  CHECK(shannon_entropy(p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("basis entropy of the worked examples") {
  ProjectorBasis cc = ProjectorBasis::product(ProjectorBasis::computational(2),
                                              ProjectorBasis::computational(2));
  CHECK(basis_entropy(bell(), cc) == doctest::Approx(1.0).epsilon(1e-12));

  CounterRng rng(42, 35);
  for (std::size_t d : {std::size_t(2), std::size_t(4)})
    CHECK(std::abs(basis_entropy(maximally_mixed(d), random_basis(d, rng))) <= 1e-10);

  DensityMatrix diag = DensityMatrix::validated(CMatrix::from_rows({{0.75, 0}, {0, 0.25}}));
  CHECK(basis_entropy(diag, qubit_basis_from_axis({0, 1, 0})) ==
        doctest::Approx(1.0 - kH14).epsilon(1e-12));
}

TEST_CASE("nonnegativity over random state-basis pairs") {
  CounterRng rng(42, 36);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t d = (trial % 2 == 0) ? 2 : 4;
    DensityMatrix rho = random_state(d, rng);
    ProjectorBasis basis = random_basis(d, rng);
    CHECK(basis_entropy(rho, basis) >= -1e-10);
  }
}

TEST_CASE("dephasing is idempotent and its output commutes with the projectors") {
  CounterRng rng(42, 37);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = (trial % 2 == 0) ? 2 : 4;
    DensityMatrix rho = random_state(d, rng);
    ProjectorBasis basis = random_basis(d, rng);
    DensityMatrix once = apply_measurement(rho, basis);
    DensityMatrix twice = apply_measurement(once, basis);
    CHECK(max_abs_diff(once.matrix(), twice.matrix()) <= 1e-12);

    // Diagonal in the basis frame: conjugating kills all off-diagonals.
    CMatrix in_frame = basis.frame().adjoint() * once.matrix() * basis.frame();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j) CHECK(std::abs(in_frame(i, j)) <= 1e-12);
  }
}

TEST_CASE("eigenbasis measurement has zero basis entropy") {
  CounterRng rng(42, 38);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = (trial % 2 == 0) ? 2 : 4;
    DensityMatrix rho = random_state(d, rng);
    ProjectorBasis eigen = ProjectorBasis::general(eigh(rho.matrix()).eigenvectors);
    CHECK(std::abs(basis_entropy(rho, eigen)) <= 1e-9);
  }
}

TEST_CASE("basis entropy is unitarily covariant") {
  CounterRng rng(42, 39);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = (trial % 2 == 0) ? 2 : 4;
    DensityMatrix rho = random_state(d, rng);
    ProjectorBasis basis = random_basis(d, rng);
    CMatrix u = random_basis(d, rng).frame();
    DensityMatrix rotated = DensityMatrix::validated(u * rho.matrix() * u.adjoint());
    ProjectorBasis rotated_basis = ProjectorBasis::general(u * basis.frame());
    CHECK(std::abs(basis_entropy(rotated, rotated_basis) - basis_entropy(rho, basis)) <= 1e-9);
  }
}

TEST_CASE("frames must be orthonormal") {
  CMatrix skew = CMatrix::from_rows({{1, 1}, {0, 1}});
  CHECK_THROWS_AS(ProjectorBasis::general(skew), std::invalid_argument);
}

}  // TEST_SUITE
