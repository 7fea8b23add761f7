#include "qcso/engine.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcso {

namespace {

int effective_workers(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// The parallel kernel: one independent series task per start element.
// Results land in per-start slots, so the outcome is schedule-independent.
std::vector<PiCluster> build_all_clusters(const LinkageEvaluator& linkage,
                                          const GroundSet& ground, int workers) {
  const long long n = static_cast<long long>(ground.size());
  std::vector<PiCluster> clusters(n);
  std::vector<std::string> errors(n);
  std::vector<char> failed(n, 0);

  const int nw = effective_workers(workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nw)
#else
  (void)nw;
#endif
  for (long long start = 0; start < n; ++start) {
    try {
      const PiSeries series =
          build_pi_series(linkage, static_cast<std::uint32_t>(start), ground);
      clusters[start] = extract_pi_cluster(series);
    } catch (const std::exception& e) {
      failed[start] = 1;
      errors[start] = e.what();
    }
  }

  for (long long start = 0; start < n; ++start) {
    if (failed[start]) {
      throw std::runtime_error("series construction failed at start " +
                               std::to_string(start) + " (" + ground.label(start) +
                               "): " + errors[start]);
    }
  }
  return clusters;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

SelectionResult run(const LinkageEvaluator& linkage, const GroundSet& ground,
                    const RunConfig& config) {
  if (linkage.size() != ground.size()) {
    throw std::invalid_argument("linkage/ground sizes disagree");
  }
  std::vector<PiCluster> clusters =
      build_all_clusters(linkage, ground, config.workers);

#ifndef NDEBUG
  // Recorded series values must agree with a fresh objective evaluation.
  for (const PiCluster& c : clusters) {
    const double fresh = evaluate_objective(linkage, c.members, ground);
    assert(std::abs(fresh - c.value) <= 1e-9 * (1.0 + std::abs(c.value)));
  }
#endif

  SelectionResult result =
      select_minimal_maximizers(std::move(clusters), config.tolerance);
  if (!config.collect_diagnostics) result.clusters.clear();
  return result;
}

SelectionResult run_serial(const LinkageEvaluator& linkage, const GroundSet& ground,
                           double tolerance) {
  if (linkage.size() != ground.size()) {
    throw std::invalid_argument("linkage/ground sizes disagree");
  }
  const std::size_t n = ground.size();
  std::vector<PiCluster> clusters;
  clusters.reserve(n);
  for (std::uint32_t start = 0; start < n; ++start) {
    clusters.push_back(
        extract_pi_cluster(build_pi_series(linkage, start, ground)));
  }
  return select_minimal_maximizers(std::move(clusters), tolerance);
}

std::vector<BenchmarkRow> benchmark(const LinkageBuilder& build_linkage,
                                    const GroundSet& ground,
                                    std::span<const int> worker_counts,
                                    double tolerance) {
  if (worker_counts.empty()) {
    throw std::invalid_argument("no worker counts to benchmark");
  }
  std::vector<BenchmarkRow> rows;
  auto push_row = [&rows](const std::string& phase, int workers, double millis) {
    double baseline = millis;
    for (const BenchmarkRow& r : rows) {
      if (r.phase == phase) {
        baseline = r.millis;
        break;
      }
    }
    rows.push_back({phase, workers, millis, millis > 0.0 ? baseline / millis : 1.0});
  };

  for (int w : worker_counts) {
    auto t0 = std::chrono::steady_clock::now();
    std::shared_ptr<const LinkageEvaluator> linkage = build_linkage(w);
    push_row("precompute", w, ms_since(t0));

    t0 = std::chrono::steady_clock::now();
    std::vector<PiCluster> clusters = build_all_clusters(*linkage, ground, w);
    push_row("series", w, ms_since(t0));

    t0 = std::chrono::steady_clock::now();
    (void)select_minimal_maximizers(std::move(clusters), tolerance);
    push_row("reduction", w, ms_since(t0));
  }

  // Serial reference for comparison with the parallel kernel.
  std::shared_ptr<const LinkageEvaluator> linkage = build_linkage(1);
  const auto t0 = std::chrono::steady_clock::now();
  (void)run_serial(*linkage, ground, tolerance);
  push_row("serial_reference", 1, ms_since(t0));

  return rows;
}

}  // namespace qcso
