#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcso/core.hpp"

namespace qcso {

struct RunConfig {
  int workers = 0;           // 0 = auto-detect
  double tolerance = 1e-9;   // value-equality at the final reduction
  bool collect_diagnostics = false;
  // Consumed only by verification harnesses; the selection itself is
  // deterministic and never draws randomness.
  std::uint64_t rng_seed = 0;
};

// Builds one series + cluster per start element on a worker pool (static
// block assignment), then applies the sequential reduction. Output is
// identical for any worker count, including 1. The first failing start
// (lowest index) aborts the run.
SelectionResult run(const LinkageEvaluator& linkage, const GroundSet& ground,
                    const RunConfig& config);

// Straight-line reference: same result as run() with any worker count,
// kept as the comparison baseline for tests and benchmarks.
SelectionResult run_serial(const LinkageEvaluator& linkage, const GroundSet& ground,
                           double tolerance);

struct BenchmarkRow {
  std::string phase;
  int workers = 0;
  double millis = 0.0;
  double speedup = 0.0;  // first row of the same phase is the baseline
};

// Builds the linkage for a given worker count; invoked (and timed) once per
// benchmarked worker count so parallel precomputation is measured too.
using LinkageBuilder =
    std::function<std::shared_ptr<const LinkageEvaluator>(int workers)>;

// Times each phase (linkage precompute, parallel series builds, reduction)
// per worker count, plus the serial reference implementation for
// comparison. Wall-clock; speedups are relative to the first listed worker
// count.
std::vector<BenchmarkRow> benchmark(const LinkageBuilder& build_linkage,
                                    const GroundSet& ground,
                                    std::span<const int> worker_counts,
                                    double tolerance = 1e-9);

}  // namespace qcso
