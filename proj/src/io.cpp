#include "qcso/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace qcso {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_double(const std::string& field, const std::string& path,
                    std::size_t row, std::size_t col) {
  const std::string where =
      path + ": row " + std::to_string(row) + ", column " + std::to_string(col);
  if (field.empty()) {
    throw InputError(where + ": missing value");
  }
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError(where + ": not a number: '" + field + "'");
  }
  if (!std::isfinite(value)) {
    throw InputError(where + ": non-finite value: '" + field + "'");
  }
  return value;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open input file: " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

DataMatrix read_data_csv(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) {
    throw InputError(path + ": empty file");
  }
  DataMatrix data;
  data.labels = split_fields(lines[0]);
  if (data.labels.empty()) {
    throw InputError(path + ": header row has no labels");
  }
  for (std::size_t c = 0; c < data.labels.size(); ++c) {
    if (data.labels[c].empty()) {
      throw InputError(path + ": row 1, column " + std::to_string(c + 1) +
                       ": empty label");
    }
  }
  data.cols = data.labels.size();
  data.rows = lines.size() - 1;
  if (data.rows == 0) {
    throw InputError(path + ": no observation rows");
  }
  data.values.assign(data.rows * data.cols, 0.0);
  for (std::size_t r = 0; r < data.rows; ++r) {
    const auto fields = split_fields(lines[r + 1]);
    if (fields.size() != data.cols) {
      throw InputError(path + ": row " + std::to_string(r + 2) + ": expected " +
                       std::to_string(data.cols) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < data.cols; ++c) {
      data.values[c * data.rows + r] = parse_double(fields[c], path, r + 2, c + 1);
    }
  }
  return data;
}

SquareMatrix read_weight_csv(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) {
    throw InputError(path + ": empty file");
  }
  const std::size_t n = lines.size();
  SquareMatrix w(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto fields = split_fields(lines[r]);
    if (fields.size() != n) {
      throw InputError(path + ": row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(n) + " fields for a square matrix, got " +
                       std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < n; ++c) {
      w(r, c) = parse_double(fields[c], path, r + 1, c + 1);
    }
  }
  return w;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot open output file: " + path);
  }
  out << content;
  if (!out) {
    throw InputError("failed writing output file: " + path);
  }
}

}  // namespace qcso
