#include "bentropy/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bentropy {

namespace {

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::vector<std::vector<double>> parse_grid(const nlohmann::json& j, const char* field,
                                            std::size_t dim) {
  if (!j.contains(field))
    throw ParseError(std::string("matrix text: missing field '") + field + "'");
  const auto& g = j.at(field);
  if (!g.is_array() || g.size() != dim)
    throw ParseError(std::string("matrix text: field '") + field + "' must be a " +
                     std::to_string(dim) + "-row array");
  std::vector<std::vector<double>> out;
  out.reserve(dim);
  std::size_t row_index = 0;
  for (const auto& row : g) {
    if (!row.is_array() || row.size() != dim)
      throw ParseError(std::string("matrix text: field '") + field + "' row " +
                       std::to_string(row_index) + " must have " + std::to_string(dim) +
                       " entries");
    std::vector<double> r;
    r.reserve(dim);
    for (const auto& v : row) {
      if (!v.is_number())
        throw ParseError(std::string("matrix text: field '") + field + "' row " +
                         std::to_string(row_index) + " has a non-numeric entry");
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
    ++row_index;
  }
  return out;
}

}  // namespace

CMatrix parse_matrix_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix text: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix text: top level must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw ParseError("matrix text: field 'dim' must be an integer");
  long dim = j.at("dim").get<long>();
  if (dim < 1 || dim > 4096) throw ParseError("matrix text: 'dim' must lie in [1, 4096]");

  auto re = parse_grid(j, "re", static_cast<std::size_t>(dim));
  auto im = parse_grid(j, "im", static_cast<std::size_t>(dim));

  CMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = complex(re[i][k], im[i][k]);
  if (!m.all_finite()) throw ParseError("matrix text: non-finite entries");
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str());
}

std::string matrix_to_text(const CMatrix& m) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << m.rows() << ",\n";
  auto emit = [&](const char* name, bool real_part) {
    os << "  \"" << name << "\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i == 0 ? "[" : "       [");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        double v = real_part ? m(i, j).real() : m(i, j).imag();
        os << format_double(v, 17);
        if (j + 1 < m.cols()) os << ", ";
      }
      os << (i + 1 < m.rows() ? "],\n" : "]");
    }
    os << "]";
  };
  emit("re", true);
  os << ",\n";
  emit("im", false);
  os << "\n}\n";
  return os.str();
}

void write_matrix_file(const CMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << matrix_to_text(m);
}

DensityMatrix read_state_file(const std::string& path) {
  return DensityMatrix::validated(read_matrix_file(path));
}

void write_state_file(const DensityMatrix& rho, const std::string& path) {
  write_matrix_file(rho.matrix(), path);
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    os << t.header[i];
    if (i + 1 < t.header.size()) os << ",";
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << format_double(row[i], 12);
      if (i + 1 < row.size()) os << ",";
    }
    os << "\n";
  }
  return os.str();
}

void write_csv_file(const Table& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << to_csv(t);
}

}  // namespace bentropy
