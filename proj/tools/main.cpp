// Command-line front end: state and basis specs in, numbers and CSV out.
//
// States:  bell | werner:z | bell-diagonal:c1,c2,c3 | bloch:a,b,c |
//          c10-example | maximally-mixed:D | <matrix file>
// Bases:   comp | axis:z1,z2,z3 | product:<spec>x<spec> |
//          samelocal:t,y1,y2,y3 | frame:<file>
//
// Values print in bits with six decimals; CSV files carry full precision.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bentropy/discord.hpp"
#include "bentropy/extremal.hpp"
#include "bentropy/io.hpp"
#include "bentropy/measure.hpp"
#include "bentropy/states.hpp"
#include "bentropy/tracers.hpp"

namespace {

using namespace bentropy;

std::string fmt6(double v) {
  char buf[64];
  // Avoid the "-0.000000" artifact on values that round to zero.
  if (v > -5e-7 && v < 0.0) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<double> parse_numbers(const std::string& text, std::size_t count,
                                  const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + tok + "' is not a number");
    }
    if (used != tok.size()) throw ParseError(what + ": trailing characters in '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count)
    throw ParseError(what + ": expected " + std::to_string(count) + " comma-separated values, got " +
                     std::to_string(out.size()));
  return out;
}

DensityMatrix parse_state_spec(const std::string& spec) {
  if (spec == "bell") return bell();
  if (spec == "c10-example") return asymmetric_discord_state();
  if (spec.rfind("werner:", 0) == 0) {
    auto v = parse_numbers(spec.substr(7), 1, "werner");
    return werner(v[0]);
  }
  if (spec.rfind("bell-diagonal:", 0) == 0) {
    auto v = parse_numbers(spec.substr(14), 3, "bell-diagonal");
    return bell_diagonal({v[0], v[1], v[2]});
  }
  if (spec.rfind("bloch:", 0) == 0) {
    auto v = parse_numbers(spec.substr(6), 3, "bloch");
    return from_bloch({v[0], v[1], v[2]});
  }
  if (spec.rfind("maximally-mixed:", 0) == 0) {
    auto v = parse_numbers(spec.substr(16), 1, "maximally-mixed");
    double d = v[0];
    if (d < 1 || d > 4096 || d != std::floor(d))
      throw ParseError("maximally-mixed: dimension must be an integer in [1, 4096]");
    return maximally_mixed(static_cast<std::size_t>(d));
  }
  return read_state_file(spec);
}

// Dimension a basis factor spec insists on; 0 when it adapts (comp).
std::size_t factor_intrinsic_dim(const std::string& spec) {
  if (spec == "comp") return 0;
  if (spec.rfind("axis:", 0) == 0) return 2;
  if (spec.rfind("frame:", 0) == 0) return read_matrix_file(spec.substr(6)).rows();
  throw ParseError("basis factor '" + spec + "' not recognized (use comp, axis:..., frame:...)");
}

ProjectorBasis parse_basis_spec(const std::string& spec, std::size_t dim);

ProjectorBasis parse_product_spec(const std::string& body, std::size_t dim) {
  std::string last_error = "no 'x' separator found";
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != 'x') continue;
    std::string left = body.substr(0, i);
    std::string right = body.substr(i + 1);
    try {
      std::size_t da = factor_intrinsic_dim(left);
      std::size_t db = factor_intrinsic_dim(right);
      if (da == 0 && db == 0) {
        auto root = static_cast<std::size_t>(std::lround(std::sqrt(double(dim))));
        if (root * root != dim)
          throw ParseError("product basis with two adaptive factors needs a square dimension, got " +
                           std::to_string(dim));
        da = db = root;
      } else if (da == 0) {
        if (db == 0 || dim % db != 0)
          throw ParseError("factor dimensions do not divide the state dimension");
        da = dim / db;
      } else if (db == 0) {
        if (dim % da != 0) throw ParseError("factor dimensions do not divide the state dimension");
        db = dim / da;
      }
      if (da * db != dim)
        throw ParseError("product factor dimensions " + std::to_string(da) + "x" +
                         std::to_string(db) + " do not match state dimension " +
                         std::to_string(dim));
      return ProjectorBasis::product(parse_basis_spec(left, da), parse_basis_spec(right, db));
    } catch (const std::exception& e) {
      last_error = e.what();  // try the next 'x'; specs and paths may contain one
    }
  }
  throw ParseError("product basis '" + body + "': " + last_error);
}

ProjectorBasis parse_basis_spec(const std::string& spec, std::size_t dim) {
  if (spec == "comp") return ProjectorBasis::computational(dim);
  if (spec.rfind("axis:", 0) == 0) {
    if (dim != 2)
      throw ParseError("axis basis applies to a single qubit, state dimension is " +
                       std::to_string(dim));
    auto v = parse_numbers(spec.substr(5), 3, "axis");
    return qubit_basis_from_axis({v[0], v[1], v[2]});
  }
  if (spec.rfind("product:", 0) == 0) return parse_product_spec(spec.substr(8), dim);
  if (spec.rfind("samelocal:", 0) == 0) {
    if (dim != 4)
      throw ParseError("samelocal basis applies to two qubits, state dimension is " +
                       std::to_string(dim));
    auto v = parse_numbers(spec.substr(10), 4, "samelocal");
    UnitaryAxisParam p{v[0], v[1], v[2], v[3]};
    if (std::abs(p.norm_sq() - 1.0) > 1e-9)
      throw ParseError("samelocal parameters must satisfy t^2+y1^2+y2^2+y3^2 = 1, got norm^2 = " +
                       std::to_string(p.norm_sq()));
    return ProjectorBasis::same_local(unitary_from_param(p));
  }
  if (spec.rfind("frame:", 0) == 0) {
    CMatrix f = read_matrix_file(spec.substr(6));
    if (f.rows() != dim)
      throw ParseError("frame dimension " + std::to_string(f.rows()) +
                       " does not match state dimension " + std::to_string(dim));
    return ProjectorBasis::general(std::move(f));
  }
  throw ParseError("basis spec '" + spec + "' not recognized");
}

// Bipartite split used by the product/samelocal optimizer classes.
std::size_t local_dim_of(std::size_t dim, const std::string& context) {
  auto root = static_cast<std::size_t>(std::lround(std::sqrt(double(dim))));
  if (root * root != dim || root < 2)
    throw ParseError(context + " needs a bipartite state of equal local dimensions, got dimension " +
                     std::to_string(dim));
  return root;
}

struct GlobalOpts {
  int seed = 42;
  int starts = 0;  // 0 = per-command default
  double tol = 1e-10;
  std::string out;
};

OptimizerConfig make_config(const GlobalOpts& g, int default_starts) {
  OptimizerConfig cfg;
  cfg.starts = g.starts > 0 ? g.starts : default_starts;
  cfg.diameter_tol = g.tol;
  cfg.seed = static_cast<std::uint64_t>(g.seed);
  return cfg;
}

void emit_table(const Table& t, const std::string& out_path) {
  if (out_path.empty())
    std::cout << to_csv(t);
  else
    write_csv_file(t, out_path);
}

int run_entropy(const std::string& input) {
  DensityMatrix rho = parse_state_spec(input);
  std::cout << fmt6(von_neumann_entropy(rho)) << "\n";
  return 0;
}

int run_basis_entropy(const std::string& input, const std::string& basis_spec) {
  DensityMatrix rho = parse_state_spec(input);
  ProjectorBasis basis = parse_basis_spec(basis_spec, rho.dim());
  std::cout << fmt6(basis_entropy(rho, basis)) << "\n";
  return 0;
}

int run_extremal(const std::string& input, const std::string& mode, const std::string& cls_name,
                 const GlobalOpts& g) {
  DensityMatrix rho = parse_state_spec(input);
  BasisClass cls = [&] {
    if (cls_name == "general") return BasisClass::general_rank1(rho.dim());
    std::size_t d = local_dim_of(rho.dim(), "--class " + cls_name);
    if (cls_name == "product") return BasisClass::product_local(d, d);
    if (cls_name == "samelocal") return BasisClass::same_local(d);
    throw ParseError("--class must be general, product, or samelocal");
  }();
  if (mode != "max" && mode != "min") throw ParseError("--mode must be max or min");
  OptimizerConfig cfg = make_config(g, 64);
  ExtremalResult r = mode == "max" ? max_basis_entropy(rho, cls, cfg)
                                   : min_basis_entropy(rho, cls, cfg);
  std::string frame_text = matrix_to_text(r.basis.frame());
  std::cout << fmt6(r.value) << "\n";
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write file: " + g.out);
    f << frame_text;
  }
  return 0;
}

int run_discord(const std::string& input, const std::string& side_name, bool oracle_grid,
                const GlobalOpts& g) {
  DensityMatrix rho = parse_state_spec(input);
  if (side_name != "A" && side_name != "B") throw ParseError("--side must be A or B");
  MeasuredSide side = side_name == "A" ? MeasuredSide::MeasureA : MeasuredSide::MeasureB;
  OptimizerConfig cfg = make_config(g, 32);
  DiscordResult r = discord_variational(rho, side, cfg);
  std::cout << "delta " << fmt6(r.delta) << "\n";
  std::cout << "mutual_information " << fmt6(r.mutual_information) << "\n";
  std::cout << "measured_mutual " << fmt6(r.measured_mutual) << "\n";
  std::cout << "axis " << fmt6(r.optimal_axis.z1) << " " << fmt6(r.optimal_axis.z2) << " "
            << fmt6(r.optimal_axis.z3) << "\n";
  if (oracle_grid) {
    // Dense sweep over the measurement sphere, independent of the optimizer.
    double best = std::numeric_limits<double>::infinity();
    const int n_theta = 721, n_phi = 1441;
    const double pi = std::numbers::pi;
    for (int it = 0; it < n_theta; ++it) {
      double th = pi * it / (n_theta - 1);
      for (int ip = 0; ip < n_phi; ++ip) {
        double ph = 2.0 * pi * ip / n_phi;
        MeasurementAxis ax{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                           std::cos(th)};
        best = std::min(best, measured_conditional_entropy(rho, ax, side));
      }
    }
    Subsystem unmeasured = side == MeasuredSide::MeasureB ? Subsystem::A : Subsystem::B;
    double s_unmeasured = von_neumann_entropy(partial_trace(rho, 2, 2, unmeasured));
    double delta_grid = r.mutual_information - (s_unmeasured - best);
    std::cout << "grid_delta " << fmt6(delta_grid) << "\n";
  }
  return 0;
}

int run_werner_sweep(int steps, const GlobalOpts& g) {
  if (steps < 1) throw ParseError("--steps must be at least 1");
  std::vector<double> zs(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) zs[static_cast<std::size_t>(i)] = double(i) / steps;
  auto rows = werner_sweep(zs, make_config(g, 64));
  Table t{{"z", "discord", "min_basis_entropy"}, {}};
  for (const auto& r : rows) t.rows.push_back({r[0], r[1], r[2]});
  emit_table(t, g.out);
  return 0;
}

int run_grover(int n, std::optional<int> k, bool full_trace, std::uint64_t marked,
               const GlobalOpts& g) {
  if (k.has_value() == full_trace)
    throw ParseError("grover needs exactly one of --k or --full-trace");
  if (full_trace) {
    GroverConfig probe{n, marked, 0};
    probe.validate();
    auto rows = grover_trace(n, 0, probe.approx_optimal_iterations());
    Table t{{"k", "p_success", "basis_entropy"}, {}};
    for (const auto& r : rows)
      t.rows.push_back({double(r.step_index), r.auxiliary, r.basis_entropy});
    emit_table(t, g.out);
    return 0;
  }
  GroverConfig cfg{n, marked, *k};
  cfg.validate();
  TraceRecord r = grover_closed_form(cfg);
  std::cout << "p_success " << fmt6(r.auxiliary) << "\n";
  std::cout << "basis_entropy " << fmt6(r.basis_entropy) << "\n";
  if (!g.out.empty()) {
    Table t{{"k", "p_success", "basis_entropy"},
            {{double(r.step_index), r.auxiliary, r.basis_entropy}}};
    write_csv_file(t, g.out);
  }
  return 0;
}

int run_shor(long modulus, long base, int t_qubits, int l_qubits, const GlobalOpts& g) {
  ShorConfig cfg{modulus, base, t_qubits, l_qubits};
  cfg.validate();
  auto rows = shor_first_register_trace(cfg);
  std::cout << "r " << cfg.order() << "\n";
  Table t{{"step", "basis_entropy"}, {}};
  for (const auto& r : rows) t.rows.push_back({double(r.step_index), r.basis_entropy});
  emit_table(t, g.out);
  return 0;
}

int run_decohere(const std::string& input, const std::string& bases_spec, bool paper_exact) {
  DensityMatrix rho = [&] {
    if (!paper_exact) return parse_state_spec(input);
    // The originally printed matrix has off-diagonal sqrt(3)/2; show why it
    // is rejected, then continue with the valid pure state it stands for.
    try {
      DensityMatrix::validated(decoherence_example_state_raw());
    } catch (const ValidationError& e) {
      std::cerr << "note: the paper-exact matrix is rejected (" << to_string(e.kind())
                << "): " << e.what() << "\n"
                << "note: proceeding with the corrected state, off-diagonal sqrt(3)/4\n";
      return decoherence_example_state();
    }
    return decoherence_example_state();
  }();
  std::vector<ProjectorBasis> bases;
  std::size_t pos = 0;
  while (pos <= bases_spec.size()) {
    std::size_t semi = bases_spec.find(';', pos);
    std::string one = bases_spec.substr(pos, semi == std::string::npos ? semi : semi - pos);
    if (!one.empty()) bases.push_back(parse_basis_spec(one, rho.dim()));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (bases.empty()) throw ParseError("--bases needs at least one basis spec");
  auto steps = decohere_sequence(rho, bases);
  for (const auto& s : steps)
    std::cout << "step " << s.record.step_index << " basis_entropy " << fmt6(s.record.basis_entropy)
              << "\n";
  std::cout << "classification " << to_string(classify_purity(steps.back().state)) << "\n";
  return 0;
}

int run_classify(const std::string& input, const GlobalOpts& g) {
  DensityMatrix rho = parse_state_spec(input);
  std::cout << to_string(classify_purity(rho, make_config(g, 64))) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"basis-entropy toolkit: entropy gain of quantum states under projective measurement"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "optimizer seed (all randomness flows from it)")
      ->capture_default_str();
  app.add_option("--starts", g.starts, "multistart count (0 = command default)");
  app.add_option("--tol", g.tol, "optimizer convergence tolerance")->capture_default_str();
  app.add_option("--out", g.out, "output file (CSV or matrix, per command)");

  std::string input, basis_spec, mode, cls_name = "general", side = "B", bases_spec;
  int steps = 100, n = 0, t_qubits = 8, l_qubits = 4;
  long modulus = 15, base = 7;
  std::optional<int> grover_k;
  bool full_trace = false, oracle_grid = false, paper_exact = false;
  std::uint64_t marked = 0;

  auto* c_entropy = app.add_subcommand("entropy", "von Neumann entropy of a state, in bits");
  c_entropy->add_option("--input", input, "state spec or matrix file")->required();

  auto* c_be = app.add_subcommand("basis-entropy", "entropy gained under one projective basis");
  c_be->add_option("--input", input, "state spec or matrix file")->required();
  c_be->add_option("--basis", basis_spec, "basis spec")->required();

  auto* c_ext = app.add_subcommand("extremal", "extremal basis entropy over a basis class");
  c_ext->add_option("--input", input, "state spec or matrix file")->required();
  c_ext->add_option("--mode", mode, "max or min")->required();
  c_ext->add_option("--class", cls_name, "general | product | samelocal")->capture_default_str();

  auto* c_disc = app.add_subcommand("discord", "quantum discord of a two-qubit state");
  c_disc->add_option("--input", input, "state spec or matrix file")->required();
  c_disc->add_option("--side", side, "measured subsystem, A or B")->capture_default_str();
  c_disc->add_flag("--oracle-grid", oracle_grid, "also report the dense-grid axis sweep value");

  auto* c_sweep = app.add_subcommand("werner-sweep", "discord and minimum basis entropy over z in [0,1]");
  c_sweep->add_option("--steps", steps, "number of intervals (rows = steps + 1)")
      ->capture_default_str();

  auto* c_grover = app.add_subcommand("grover", "search-iteration basis-entropy trace");
  c_grover->add_option("--n", n, "qubit count")->required();
  c_grover->add_option("--k", grover_k, "single iteration count");
  c_grover->add_flag("--full-trace", full_trace, "trace k from 0 through the estimated optimum");
  c_grover->add_option("--marked", marked, "marked index")->capture_default_str();

  auto* c_shor = app.add_subcommand("shor", "order-finding first-register trace");
  c_shor->add_option("--N", modulus, "modulus")->capture_default_str();
  c_shor->add_option("--x", base, "coprime base")->capture_default_str();
  c_shor->add_option("--t", t_qubits, "first-register qubits")->capture_default_str();
  c_shor->add_option("--l", l_qubits, "second-register qubits")->capture_default_str();

  auto* c_dec = app.add_subcommand("decohere", "fold measurement channels over a state");
  c_dec->add_option("--input", input, "state spec or matrix file");
  c_dec->add_option("--bases", bases_spec, "semicolon-separated basis specs")->required();
  c_dec->add_flag("--paper-exact", paper_exact,
                  "use the originally printed decoherence matrix (rejected, then corrected)");

  auto* c_cls = app.add_subcommand("classify", "Pure | Mixed | MaximallyMixed via maximal basis entropy");
  c_cls->add_option("--input", input, "state spec or matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_entropy->parsed()) return run_entropy(input);
    if (c_be->parsed()) return run_basis_entropy(input, basis_spec);
    if (c_ext->parsed()) return run_extremal(input, mode, cls_name, g);
    if (c_disc->parsed()) return run_discord(input, side, oracle_grid, g);
    if (c_sweep->parsed()) return run_werner_sweep(steps, g);
    if (c_grover->parsed()) return run_grover(n, grover_k, full_trace, marked, g);
    if (c_shor->parsed()) return run_shor(modulus, base, t_qubits, l_qubits, g);
    if (c_dec->parsed()) {
      if (!paper_exact && input.empty())
        throw ParseError("decohere needs --input (or --paper-exact)");
      return run_decohere(input, bases_spec, paper_exact);
    }
    if (c_cls->parsed()) return run_classify(input, g);
  } catch (const ValidationError& e) {
    std::cerr << "error: state rejected (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
