#pragma once

#include <cstdint>
#include <vector>

#include "qcso/core.hpp"

namespace qcso {

inline constexpr std::size_t kDefaultOracleCap = 16;

struct OracleResult {
  double optimum = 0.0;
  std::vector<Subset> all_maximizers;      // within tolerance of optimum
  std::vector<Subset> minimal_maximizers;  // inclusion-minimal among them
  double tolerance = 0.0;
};

// Exhaustive ground truth: evaluates the objective on every nonempty proper
// subset (2^N - 2 evaluations). Deliberately plain so it is obviously
// correct; N is capped.
OracleResult brute_force(const LinkageEvaluator& linkage, const GroundSet& ground,
                         double tolerance, std::size_t cap = kDefaultOracleCap);

struct UnionDecompositionCheck {
  bool pass = true;
  std::vector<Subset> witnesses;  // maximizers not equal to their minimal union
};

// Every maximizer must equal the union of the minimal maximizers it
// contains.
UnionDecompositionCheck check_union_decomposition(const OracleResult& result);

struct IntersectionClosureCheck {
  bool pass = true;
  std::vector<std::pair<Subset, Subset>> witnesses;
};

// For every pair of maximizers with nonempty intersection, the intersection
// must itself attain the optimum (within tolerance).
IntersectionClosureCheck check_intersection_closure(const SetFunction& objective,
                                                    const OracleResult& result);

struct QuasiConcavityViolation {
  Subset s;
  Subset t;
  double f_s = 0.0;
  double f_t = 0.0;
  double f_intersection = 0.0;
};

struct QuasiConcavityReport {
  std::size_t trials = 0;
  std::size_t violation_count = 0;
  std::vector<QuasiConcavityViolation> witnesses;  // capped sample

  bool ok() const { return violation_count == 0; }
};

// Samples random S, T (nonempty proper subsets with nonempty intersection)
// and reports every pair with F(S n T) < min(F(S), F(T)) - tolerance.
QuasiConcavityReport check_quasi_concavity(const SetFunction& objective,
                                           const GroundSet& ground,
                                           std::size_t trials, std::uint64_t seed,
                                           double tolerance = 1e-9);

// The induced objective as a plain set function, for the checks above.
SetFunction induced_objective(const LinkageEvaluator& linkage, const GroundSet& ground);

}  // namespace qcso
