#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcso/linkage.hpp"
#include "qcso/matrix.hpp"

namespace qcso {

// Pairwise distance entries: squared Euclidean differences or plain
// absolute differences. Squared is the default throughout; euclidean
// recovers the standard distance-covariance estimator.
enum class DistanceMode { kSquaredEuclidean, kEuclidean };

const char* distance_mode_name(DistanceMode mode);
DistanceMode parse_distance_mode(const std::string& name);

// Observations by rows, features by columns; column-major storage.
struct DataMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> labels;
  std::vector<double> values;  // values[c * rows + r]

  std::span<const double> column(std::size_t c) const {
    return {values.data() + c * rows, rows};
  }
  double at(std::size_t r, std::size_t c) const { return values[c * rows + r]; }
};

// Pairwise distance matrix of a single sample column.
SquareMatrix distance_matrix(std::span<const double> x, DistanceMode mode);

// Conjugation by J = I - (1/n)11^T, computed entrywise as
// E - row mean - column mean + grand mean. Output rows and columns sum to
// zero. Rejects asymmetric or non-finite input.
SquareMatrix double_center(const SquareMatrix& e);

// Sample distance covariance: (1/n^2) x entrywise inner product of the two
// double-centered pairwise distance matrices. Requires n >= 3 equal-length
// columns.
double sample_dcov(std::span<const double> x, std::span<const double> y,
                   DistanceMode mode);

// Normalized variant in [0, 1]; 0 when either self-covariance vanishes.
double sample_dcor(std::span<const double> x, std::span<const double> y,
                   DistanceMode mode);

struct NormalizeOutcome {
  DataMatrix data;
  std::vector<std::size_t> constant_columns;  // zeroed, not errored
};

// Per-column z-score (mean 0, unit sample standard deviation).
NormalizeOutcome normalize_columns(const DataMatrix& data);

struct PairwiseOptions {
  DistanceMode mode = DistanceMode::kSquaredEuclidean;
  int workers = 0;  // 0 = auto
  // Per-column centered matrices are materialized once when they fit this
  // budget; otherwise pairs are recomputed streaming.
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

// D[i][j] = sample dcov of columns i and j; symmetric, nonnegative.
SquareMatrix pairwise_dcov_matrix(const DataMatrix& data, const PairwiseOptions& opts);

// Derived dcor matrix, reusing a precomputed dcov matrix.
SquareMatrix dcor_from_dcov(const SquareMatrix& dcov);

// Diversity linkage pi(i, S) = -sum_{j in S} dcov(col i, col j). The dcov
// matrix is nonnegative, so the monotone linkage law holds by construction.
// Warns (if `warnings` given) when the off-diagonal mass is numerically
// zero and the objective degenerates.
std::shared_ptr<PairwiseSumLinkage> dcov_linkage(const DataMatrix& data,
                                                 const PairwiseOptions& opts,
                                                 std::vector<std::string>* warnings = nullptr);

struct KosorokReport {
  int trials = 0;
  int holds = 0;
  double fraction = 0.0;
  bool passed = false;
};

// Monte Carlo check that adding independent noise cannot increase distance
// covariance: generates dependent (X, Y) and independent Z, and counts how
// often dcov(X+Z, Y) <= dcov(X, Y). Statistical smoke check only; the
// sample estimator is noisy, so this uses the plain euclidean estimator and
// a 90% pass bar rather than a strict inequality.
KosorokReport kosorok_smoke_test(std::size_t n_samples, std::uint64_t seed,
                                 int trials = 100, double pass_fraction = 0.9);

}  // namespace qcso
