#include "qcso/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace qcso {

double evaluate_objective(const LinkageEvaluator& linkage, const Subset& members,
                          const GroundSet& ground) {
  const std::size_t n = ground.size();
  if (members.universe_size() != n || linkage.size() != n) {
    throw std::invalid_argument("subset/linkage/ground sizes disagree");
  }
  if (members.empty() || members.full()) {
    throw std::domain_error("objective undefined on the empty set and the full ground set");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (members.contains(i)) continue;
    const double v = linkage.evaluate(i, members);
    if (!std::isfinite(v)) {
      throw std::runtime_error("non-finite linkage value for element " + ground.label(i));
    }
    if (v < best) best = v;
  }
  return best;
}

PiSeries build_pi_series(const LinkageEvaluator& linkage, std::uint32_t start,
                         const GroundSet& ground) {
  const std::size_t n = ground.size();
  if (linkage.size() != n) {
    throw std::invalid_argument("linkage/ground sizes disagree");
  }
  if (start >= n) {
    throw std::invalid_argument("start index " + std::to_string(start) +
                                " outside ground set of size " + std::to_string(n));
  }

  PiSeries series;
  series.start = start;
  series.order.reserve(n);
  series.order.push_back(start);
  series.step_values.reserve(n - 1);

  auto scorer = linkage.make_scorer();
  scorer->push(start);

  std::vector<std::uint32_t> remaining;
  remaining.reserve(n - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i != start) remaining.push_back(i);
  }

  while (!remaining.empty()) {
    double best_score = std::numeric_limits<double>::infinity();
    std::uint32_t best_element = 0;
    std::size_t best_pos = 0;
    bool found = false;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      const std::uint32_t e = remaining[pos];
      const double s = scorer->score(e);
      if (!std::isfinite(s)) {
        throw std::runtime_error("non-finite linkage value for element " +
                                 ground.label(e));
      }
      if (!found || s < best_score || (s == best_score && e < best_element)) {
        best_score = s;
        best_element = e;
        best_pos = pos;
        found = true;
      }
    }
    series.order.push_back(best_element);
    series.step_values.push_back(best_score);
    remaining[best_pos] = remaining.back();
    remaining.pop_back();
    if (!remaining.empty()) scorer->push(best_element);
  }
  return series;
}

PiCluster extract_pi_cluster(const PiSeries& series) {
  const std::size_t n = series.order.size();
  if (n < 2 || series.step_values.size() != n - 1) {
    throw std::invalid_argument("malformed series: order/step_values sizes disagree");
  }
  if (series.order.front() != series.start) {
    throw std::invalid_argument("malformed series: order does not begin at start");
  }
  std::vector<char> seen(n, 0);
  for (std::uint32_t e : series.order) {
    if (e >= n || seen[e]) {
      throw std::invalid_argument("malformed series: order is not a permutation");
    }
    seen[e] = 1;
  }

  std::size_t best_k = 1;
  double best_value = series.step_values[0];
  for (std::size_t k = 2; k <= n - 1; ++k) {
    if (series.step_values[k - 1] > best_value) {
      best_value = series.step_values[k - 1];
      best_k = k;
    }
  }

  PiCluster cluster;
  cluster.start = series.start;
  cluster.prefix_len = static_cast<std::uint32_t>(best_k);
  cluster.value = best_value;
  cluster.members = Subset(n);
  for (std::size_t k = 0; k < best_k; ++k) cluster.members.insert(series.order[k]);
  return cluster;
}

SelectionResult select_minimal_maximizers(std::vector<PiCluster> clusters,
                                          double tolerance) {
  if (clusters.empty()) {
    throw std::domain_error("no clusters to select from");
  }
  if (tolerance < 0.0) {
    throw std::invalid_argument("tolerance must be nonnegative");
  }

  // Dedup by set equality; the first occurrence (lowest start) wins.
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::vector<std::size_t> unique_idx;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    auto key = clusters[c].members.indices();
    if (seen.emplace(std::move(key), c).second) unique_idx.push_back(c);
  }

  double optimum = -std::numeric_limits<double>::infinity();
  for (std::size_t c : unique_idx) optimum = std::max(optimum, clusters[c].value);

  std::vector<std::size_t> kept;
  for (std::size_t c : unique_idx) {
    if (clusters[c].value >= optimum - tolerance) kept.push_back(c);
  }

  // Nested-candidate guard against floating-point ties.
  std::vector<Maximizer> maximizers;
  for (std::size_t a : kept) {
    bool has_kept_strict_subset = false;
    for (std::size_t b : kept) {
      if (a != b && clusters[b].members.is_strict_subset_of(clusters[a].members)) {
        has_kept_strict_subset = true;
        break;
      }
    }
    if (!has_kept_strict_subset) {
      maximizers.push_back({clusters[a].members, clusters[a].value});
    }
  }

  std::sort(maximizers.begin(), maximizers.end(),
            [](const Maximizer& a, const Maximizer& b) {
              return subset_order_less(a.members, b.members);
            });

  SelectionResult result;
  result.optimum = optimum;
  result.minimal_maximizers = std::move(maximizers);
  result.clusters = std::move(clusters);
  result.tolerance = tolerance;
  return result;
}

}  // namespace qcso
