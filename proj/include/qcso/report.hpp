#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcso/core.hpp"
#include "qcso/engine.hpp"
#include "qcso/matrix.hpp"
#include "qcso/verify.hpp"

namespace qcso {

// Invocation record echoed into every output file so results are
// reproducible from the artifact alone. Worker count is deliberately not
// part of it: results are identical for every worker count, and output
// files are byte-compared across worker counts in tests.
struct Manifest {
  std::string command;
  std::string input;
  std::string linkage;   // "dcov" | "weights"
  std::string distance;  // "squared" | "euclidean"
  bool normalize = true;
  double tolerance = 1e-9;
  std::string output;
};

std::string render_select_document(const Manifest& manifest,
                                   const SelectionResult& result,
                                   const GroundSet& ground, bool include_clusters);

std::string render_verify_document(const Manifest& manifest,
                                   const VerifyOutcome& outcome,
                                   const GroundSet& ground);

// Matrix CSV with `# key=value` manifest comment lines, then a header row
// of labels, then one row per feature.
std::string render_matrix_csv(const Manifest& manifest,
                              const std::vector<std::string>& labels,
                              const SquareMatrix& matrix);

// Timing CSV: phase, workers, milliseconds, speedup.
std::string render_bench_csv(const Manifest& manifest,
                             std::span<const BenchmarkRow> rows);

}  // namespace qcso
