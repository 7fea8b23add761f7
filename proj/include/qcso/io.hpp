#pragma once

#include <stdexcept>
#include <string>

#include "qcso/dcov.hpp"
#include "qcso/matrix.hpp"

namespace qcso {

// Malformed or unreadable input; messages carry file, row, and column.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Header row of feature labels, one observation per row. Missing and
// non-finite values are rejected, never imputed.
DataMatrix read_data_csv(const std::string& path);

// Square, header-free numeric matrix.
SquareMatrix read_weight_csv(const std::string& path);

// Shortest round-trip decimal representation.
std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qcso
