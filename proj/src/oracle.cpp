#include "qcso/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qcso/rand.hpp"

namespace qcso {

namespace {

// Random nonempty proper subset: size uniform in 1..N-1, members by partial
// Fisher-Yates.
Subset sample_proper_subset(std::size_t n, Rng& rng, std::vector<std::uint32_t>& pool) {
  const std::size_t size = rng.uniform_int(1, n - 1);
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t j = rng.uniform_int(k, n - 1);
    std::swap(pool[k], pool[j]);
  }
  Subset s(n);
  for (std::size_t k = 0; k < size; ++k) s.insert(pool[k]);
  return s;
}

}  // namespace

OracleResult brute_force(const LinkageEvaluator& linkage, const GroundSet& ground,
                         double tolerance, std::size_t cap) {
  const std::size_t n = ground.size();
  // Hard limit regardless of cap: the value table is 8 * 2^N bytes.
  if (n > cap || n > 24) {
    throw std::domain_error("ground set size " + std::to_string(n) +
                            " exceeds the oracle cap of " +
                            std::to_string(std::min<std::size_t>(cap, 24)));
  }
  if (linkage.size() != n) {
    throw std::invalid_argument("linkage/ground sizes disagree");
  }

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<double> values(full + 1, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long mask = 1; mask < static_cast<long long>(full); ++mask) {
    const Subset members = Subset::from_mask(n, static_cast<std::uint64_t>(mask));
    values[mask] = evaluate_objective(linkage, members, ground);
  }

  double optimum = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    optimum = std::max(optimum, values[mask]);
  }

  OracleResult result;
  result.optimum = optimum;
  result.tolerance = tolerance;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (values[mask] >= optimum - tolerance) {
      result.all_maximizers.push_back(Subset::from_mask(n, mask));
    }
  }
  for (const Subset& s : result.all_maximizers) {
    bool minimal = true;
    for (const Subset& t : result.all_maximizers) {
      if (t.is_strict_subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.minimal_maximizers.push_back(s);
  }
  std::sort(result.all_maximizers.begin(), result.all_maximizers.end(), subset_order_less);
  std::sort(result.minimal_maximizers.begin(), result.minimal_maximizers.end(),
            subset_order_less);
  return result;
}

UnionDecompositionCheck check_union_decomposition(const OracleResult& result) {
  UnionDecompositionCheck check;
  for (const Subset& s : result.all_maximizers) {
    Subset contained_union(s.universe_size());
    for (const Subset& m : result.minimal_maximizers) {
      if (m.is_subset_of(s)) contained_union = contained_union.unite(m);
    }
    if (contained_union != s) {
      check.pass = false;
      check.witnesses.push_back(s);
    }
  }
  return check;
}

IntersectionClosureCheck check_intersection_closure(const SetFunction& objective,
                                                    const OracleResult& result) {
  IntersectionClosureCheck check;
  const auto& maxima = result.all_maximizers;
  for (std::size_t a = 0; a < maxima.size(); ++a) {
    for (std::size_t b = a + 1; b < maxima.size(); ++b) {
      const Subset inter = maxima[a].intersect(maxima[b]);
      if (inter.empty()) continue;
      if (objective(inter) < result.optimum - result.tolerance) {
        check.pass = false;
        check.witnesses.emplace_back(maxima[a], maxima[b]);
      }
    }
  }
  return check;
}

QuasiConcavityReport check_quasi_concavity(const SetFunction& objective,
                                           const GroundSet& ground,
                                           std::size_t trials, std::uint64_t seed,
                                           double tolerance) {
  constexpr std::size_t kMaxWitnesses = 16;
  const std::size_t n = ground.size();
  QuasiConcavityReport report;

  Rng rng(seed);
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Subset s = sample_proper_subset(n, rng, pool);
    Subset t = sample_proper_subset(n, rng, pool);
    Subset inter = s.intersect(t);
    while (inter.empty()) {
      s = sample_proper_subset(n, rng, pool);
      t = sample_proper_subset(n, rng, pool);
      inter = s.intersect(t);
    }
    const double f_s = objective(s);
    const double f_t = objective(t);
    const double f_i = objective(inter);
    ++report.trials;
    if (f_i < std::min(f_s, f_t) - tolerance) {
      ++report.violation_count;
      if (report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({s, t, f_s, f_t, f_i});
      }
    }
  }
  return report;
}

SetFunction induced_objective(const LinkageEvaluator& linkage, const GroundSet& ground) {
  return [&linkage, &ground](const Subset& members) {
    return evaluate_objective(linkage, members, ground);
  };
}

}  // namespace qcso
