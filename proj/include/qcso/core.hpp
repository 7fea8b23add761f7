#pragma once

#include <cstdint>
#include <vector>

#include "qcso/ground.hpp"
#include "qcso/linkage.hpp"

namespace qcso {

// Greedy ordering of the whole ground set from a chosen start element.
// order[k] minimizes the linkage against the prefix order[0..k-1], ties
// broken toward the lowest element index; step_values[k-1] records that
// minimum, which equals the induced objective of the length-k prefix.
struct PiSeries {
  std::uint32_t start = 0;
  std::vector<std::uint32_t> order;
  std::vector<double> step_values;  // size order.size() - 1
};

// Shortest prefix of a series attaining the maximal step value; candidate
// inclusion-minimal maximizer.
struct PiCluster {
  std::uint32_t start = 0;
  std::uint32_t prefix_len = 0;
  Subset members;
  double value = 0.0;
};

struct Maximizer {
  Subset members;
  double value = 0.0;
};

struct SelectionResult {
  double optimum = 0.0;
  std::vector<Maximizer> minimal_maximizers;  // sorted by (size, members)
  std::vector<PiCluster> clusters;            // one per start, diagnostics
  double tolerance = 0.0;
};

// Induced objective: min over elements outside `members` of the linkage
// against `members`. Defined only for nonempty proper subsets.
double evaluate_objective(const LinkageEvaluator& linkage, const Subset& members,
                          const GroundSet& ground);

// Builds the greedy series from `start` using the linkage's prefix scorer:
// each step costs one score-update sweep plus one min-scan. Non-finite
// linkage values abort with the offending element identified.
PiSeries build_pi_series(const LinkageEvaluator& linkage, std::uint32_t start,
                         const GroundSet& ground);

// Smallest k maximizing the recorded step values (exact comparison).
PiCluster extract_pi_cluster(const PiSeries& series);

// Final reduction: deduplicates clusters by set equality, keeps those within
// `tolerance` of the best value, and drops any kept cluster that strictly
// contains another kept cluster (exact-arithmetic theory makes minimal
// maximizers disjoint; floating-point ties can still surface nested
// candidates). Requires one cluster per start element.
SelectionResult select_minimal_maximizers(std::vector<PiCluster> clusters,
                                          double tolerance);

}  // namespace qcso
