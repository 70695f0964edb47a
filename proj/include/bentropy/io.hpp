#pragma once

#include <string>
#include <vector>

#include "bentropy/density.hpp"

namespace bentropy {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix text format: a JSON object with fields
//   dim  integer
//   re   dim x dim array of reals
//   im   dim x dim array of reals
// The writer emits 17 significant digits so values round-trip exactly.
// Used both for states and for measurement frames.
CMatrix parse_matrix_text(const std::string& text);
CMatrix read_matrix_file(const std::string& path);
std::string matrix_to_text(const CMatrix& m);
void write_matrix_file(const CMatrix& m, const std::string& path);

// Parse + validate in one step.
DensityMatrix read_state_file(const std::string& path);
void write_state_file(const DensityMatrix& rho, const std::string& path);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Header row plus data rows, values at 12 significant digits.
std::string to_csv(const Table& t);
void write_csv_file(const Table& t, const std::string& path);

}  // namespace bentropy
