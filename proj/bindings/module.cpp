// Python bindings for the core operations. Matrices cross the boundary as
// complex128 numpy arrays; validation errors surface as ValueError.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bentropy/discord.hpp"
#include "bentropy/eigh.hpp"
#include "bentropy/extremal.hpp"
#include "bentropy/measure.hpp"
#include "bentropy/states.hpp"
#include "bentropy/tracers.hpp"

namespace py = pybind11;
using namespace bentropy;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

CMatrix to_cmatrix(const ComplexArray& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  auto r = arr.unchecked<2>();
  CMatrix m(static_cast<std::size_t>(r.shape(0)), static_cast<std::size_t>(r.shape(1)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    for (py::ssize_t j = 0; j < r.shape(1); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
  return m;
}

py::array_t<std::complex<double>> to_numpy(const CMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return out;
}

DensityMatrix state_of(const ComplexArray& arr) {
  return DensityMatrix::validated(to_cmatrix(arr));
}

BasisClass class_of(const std::string& name, std::size_t dim) {
  if (name == "general") return BasisClass::general_rank1(dim);
  auto root = static_cast<std::size_t>(std::lround(std::sqrt(double(dim))));
  if (root * root != dim)
    throw std::invalid_argument("class '" + name + "' needs a square dimension, got " +
                                std::to_string(dim));
  if (name == "product") return BasisClass::product_local(root, root);
  if (name == "samelocal") return BasisClass::same_local(root);
  throw std::invalid_argument("basis class must be general, product, or samelocal");
}

OptimizerConfig config_of(int starts, int seed, double tol) {
  OptimizerConfig cfg;
  if (starts > 0) cfg.starts = starts;
  cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.diameter_tol = tol;
  return cfg;
}

MeasuredSide side_of(const std::string& name) {
  if (name == "A") return MeasuredSide::MeasureA;
  if (name == "B") return MeasuredSide::MeasureB;
  throw std::invalid_argument("side must be 'A' or 'B'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "basis entropy of quantum states under projective measurement";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // States.
  m.def("bell", [] { return to_numpy(bell().matrix()); }, "the |Phi+> Bell state");
  m.def(
      "werner", [](double z) { return to_numpy(werner(z).matrix()); }, py::arg("z"),
      "(1-z) I/4 + z |Phi+><Phi+|");
  m.def(
      "bell_diagonal",
      [](double c1, double c2, double c3) {
        return to_numpy(bell_diagonal({c1, c2, c3}).matrix());
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def(
      "from_bloch",
      [](double a, double b, double c) { return to_numpy(from_bloch({a, b, c}).matrix()); },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "qubit state (1/2) I + a s1 + b s2 + c s3 (pure at radius 1/2)");
  m.def("asymmetric_discord_state",
        [] { return to_numpy(asymmetric_discord_state().matrix()); },
        "two-qubit state with one-sided discord");
  m.def(
      "maximally_mixed", [](std::size_t d) { return to_numpy(maximally_mixed(d).matrix()); },
      py::arg("dim"));

  // Validation and linear algebra.
  m.def(
      "validate_state",
      [](const ComplexArray& rho) {
        state_of(rho);
        return true;
      },
      py::arg("rho"), "raise ValueError unless rho is a density matrix");
  m.def(
      "eigh",
      [](const ComplexArray& h) {
        EigenDecomposition d = eigh(to_cmatrix(h));
        return py::make_tuple(d.eigenvalues, to_numpy(d.eigenvectors));
      },
      py::arg("hermitian"), "ascending eigenvalues and eigenvector columns");
  m.def(
      "partial_trace",
      [](const ComplexArray& rho, std::size_t dim_a, std::size_t dim_b, const std::string& keep) {
        Subsystem s;
        if (keep == "A")
          s = Subsystem::A;
        else if (keep == "B")
          s = Subsystem::B;
        else
          throw std::invalid_argument("keep must be 'A' or 'B'");
        return to_numpy(partial_trace(state_of(rho), dim_a, dim_b, s).matrix());
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("keep"));

  // Entropies.
  m.def(
      "von_neumann_entropy", [](const ComplexArray& rho) { return von_neumann_entropy(state_of(rho)); },
      py::arg("rho"), "S(rho) in bits");
  m.def(
      "basis_entropy",
      [](const ComplexArray& rho, const ComplexArray& frame) {
        return basis_entropy(state_of(rho), ProjectorBasis::general(to_cmatrix(frame)));
      },
      py::arg("rho"), py::arg("frame"),
      "S(sum_k P_k rho P_k) - S(rho) for the rank-1 basis given by frame columns");
  m.def(
      "axis_frame",
      [](double z1, double z2, double z3) {
        return to_numpy(qubit_basis_from_axis({z1, z2, z3}).frame());
      },
      py::arg("z1"), py::arg("z2"), py::arg("z3"),
      "eigenframe of z . sigma for a unit axis");
  m.def(
      "product_frame",
      [](const ComplexArray& a, const ComplexArray& b) {
        return to_numpy(kron(to_cmatrix(a), to_cmatrix(b)));
      },
      py::arg("frame_a"), py::arg("frame_b"), "Kronecker product of two frames");
  m.def(
      "apply_measurement",
      [](const ComplexArray& rho, const ComplexArray& frame) {
        return to_numpy(
            apply_measurement(state_of(rho), ProjectorBasis::general(to_cmatrix(frame))).matrix());
      },
      py::arg("rho"), py::arg("frame"), "dephase rho in the given basis");

  // Extrema and classification.
  auto extremal_out = [](const ExtremalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["frame"] = to_numpy(r.basis.frame());
    d["starts_used"] = r.starts_used;
    d["converged"] = r.converged;
    return d;
  };
  m.def(
      "max_basis_entropy",
      [extremal_out](const ComplexArray& rho, const std::string& basis_class, int starts, int seed,
                     double tol) {
        DensityMatrix s = state_of(rho);
        return extremal_out(max_basis_entropy(s, class_of(basis_class, s.dim()),
                                              config_of(starts, seed, tol)));
      },
      py::arg("rho"), py::arg("basis_class") = "general", py::arg("starts") = 0,
      py::arg("seed") = 42, py::arg("tol") = 1e-10);
  m.def(
      "min_basis_entropy",
      [extremal_out](const ComplexArray& rho, const std::string& basis_class, int starts, int seed,
                     double tol) {
        DensityMatrix s = state_of(rho);
        return extremal_out(min_basis_entropy(s, class_of(basis_class, s.dim()),
                                              config_of(starts, seed, tol)));
      },
      py::arg("rho"), py::arg("basis_class") = "general", py::arg("starts") = 0,
      py::arg("seed") = 42, py::arg("tol") = 1e-10);
  m.def(
      "classify_purity",
      [](const ComplexArray& rho, int starts, int seed, double tol) {
        return std::string(
            to_string(classify_purity(state_of(rho), config_of(starts, seed, tol))));
      },
      py::arg("rho"), py::arg("starts") = 0, py::arg("seed") = 42, py::arg("tol") = 1e-10,
      "'Pure' | 'Mixed' | 'MaximallyMixed'");

  // Discord.
  m.def(
      "mutual_information",
      [](const ComplexArray& rho, std::size_t dim_a, std::size_t dim_b) {
        return mutual_information(state_of(rho), dim_a, dim_b);
      },
      py::arg("rho"), py::arg("dim_a") = 2, py::arg("dim_b") = 2);
  m.def(
      "discord",
      [](const ComplexArray& rho, const std::string& side, int starts, int seed, double tol) {
        DiscordResult r = discord_variational(state_of(rho), side_of(side),
                                              config_of(starts > 0 ? starts : 32, seed, tol));
        py::dict d;
        d["delta"] = r.delta;
        d["mutual_information"] = r.mutual_information;
        d["measured_mutual"] = r.measured_mutual;
        d["axis"] = py::make_tuple(r.optimal_axis.z1, r.optimal_axis.z2, r.optimal_axis.z3);
        d["converged"] = r.converged;
        return d;
      },
      py::arg("rho"), py::arg("side") = "B", py::arg("starts") = 0, py::arg("seed") = 42,
      py::arg("tol") = 1e-10, "variational discord of a two-qubit state");
  m.def(
      "luo_discord", [](double c1, double c2, double c3) { return luo_discord({c1, c2, c3}); },
      py::arg("c1"), py::arg("c2"), py::arg("c3"),
      "closed-form discord for maximally mixed marginals");
  m.def(
      "detect_discord",
      [](const ComplexArray& rho, int starts, int seed, double tol) {
        DiscordDetection d = detect_discord(state_of(rho), config_of(starts, seed, tol));
        return py::make_tuple(d.discord_present, d.min_basis_entropy);
      },
      py::arg("rho"), py::arg("starts") = 0, py::arg("seed") = 42, py::arg("tol") = 1e-10,
      "(present, min_basis_entropy) over product-local bases");
  m.def(
      "werner_sweep",
      [](const std::vector<double>& z_values, int starts, int seed, double tol) {
        return werner_sweep(z_values, config_of(starts, seed, tol));
      },
      py::arg("z_values"), py::arg("starts") = 0, py::arg("seed") = 42, py::arg("tol") = 1e-10,
      "rows (z, closed-form discord, optimizer min basis entropy)");

  // Algorithm traces.
  auto record_tuple = [](const TraceRecord& r) {
    return py::make_tuple(r.step_index, r.basis_entropy, r.auxiliary);
  };
  m.def(
      "grover_trace",
      [record_tuple](int n, int k_first, int k_last) {
        py::list rows;
        for (const auto& r : grover_trace(n, k_first, k_last)) rows.append(record_tuple(r));
        return rows;
      },
      py::arg("n"), py::arg("k_first"), py::arg("k_last"),
      "closed-form rows (k, basis_entropy, p_success)");
  m.def(
      "grover_optimal_iterations",
      [](int n) {
        GroverConfig cfg{n, 0, 0};
        cfg.validate();
        return py::make_tuple(cfg.optimal_iterations(), cfg.approx_optimal_iterations());
      },
      py::arg("n"), "(exact argmax of p_success, sqrt-rule estimate)");
  m.def(
      "shor_trace",
      [record_tuple](long modulus, long base, int t_qubits, int l_qubits) {
        ShorConfig cfg{modulus, base, t_qubits, l_qubits};
        py::list rows;
        for (const auto& r : shor_first_register_trace(cfg)) rows.append(record_tuple(r));
        return py::make_tuple(cfg.order(), rows);
      },
      py::arg("modulus") = 15, py::arg("base") = 7, py::arg("t_qubits") = 8,
      py::arg("l_qubits") = 4, "(order, rows (step, basis_entropy, outcome_count))");
  m.def(
      "decohere_sequence",
      [](const ComplexArray& rho, const std::vector<ComplexArray>& frames) {
        std::vector<ProjectorBasis> bases;
        bases.reserve(frames.size());
        for (const auto& f : frames) bases.push_back(ProjectorBasis::general(to_cmatrix(f)));
        py::list steps;
        for (const auto& s : decohere_sequence(state_of(rho), bases)) {
          py::dict d;
          d["state"] = to_numpy(s.state.matrix());
          d["basis_entropy"] = s.record.basis_entropy;
          d["total_entropy"] = s.record.auxiliary;
          steps.append(d);
        }
        return steps;
      },
      py::arg("rho"), py::arg("frames"), "fold dephasing channels, recording entropy per step");
}
