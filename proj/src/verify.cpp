#include "qcso/verify.hpp"

#include <algorithm>
#include <cmath>

namespace qcso {

namespace {

std::string subset_to_string(const Subset& s, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::uint32_t e) {
    if (!first) out += ",";
    out += ground.label(e);
    first = false;
  });
  out += "}";
  return out;
}

std::string subsets_to_string(const std::vector<Subset>& sets, const GroundSet& ground) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += " ";
    out += subset_to_string(sets[i], ground);
  }
  out += "]";
  return out;
}

}  // namespace

bool VerifyOutcome::all_pass() const {
  if (!agree) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

VerifyOutcome run_verification(const LinkageEvaluator& linkage, const GroundSet& ground,
                               double tolerance, std::uint64_t seed,
                               std::size_t quasi_concavity_trials,
                               std::size_t oracle_cap) {
  VerifyOutcome outcome;

  RunConfig config;
  config.tolerance = tolerance;
  config.collect_diagnostics = true;
  outcome.engine = run(linkage, ground, config);
  outcome.oracle = brute_force(linkage, ground, tolerance, oracle_cap);

  std::vector<Subset> engine_sets;
  engine_sets.reserve(outcome.engine.minimal_maximizers.size());
  for (const Maximizer& m : outcome.engine.minimal_maximizers) {
    engine_sets.push_back(m.members);
  }

  const bool sets_equal = engine_sets == outcome.oracle.minimal_maximizers;
  const bool values_close =
      std::abs(outcome.engine.optimum - outcome.oracle.optimum) <= tolerance;
  outcome.agree = sets_equal && values_close;
  outcome.checks.push_back(
      {"oracle-agreement", outcome.agree,
       "engine " + subsets_to_string(engine_sets, ground) + " vs oracle " +
           subsets_to_string(outcome.oracle.minimal_maximizers, ground)});

  bool disjoint = true;
  const auto& minimal = outcome.oracle.minimal_maximizers;
  for (std::size_t a = 0; a < minimal.size() && disjoint; ++a) {
    for (std::size_t b = a + 1; b < minimal.size(); ++b) {
      if (!minimal[a].intersect(minimal[b]).empty()) {
        disjoint = false;
        break;
      }
    }
  }
  outcome.checks.push_back({"disjointness", disjoint,
                            std::to_string(minimal.size()) + " minimal maximizers"});

  const auto union_check = check_union_decomposition(outcome.oracle);
  outcome.checks.push_back({"union-decomposition", union_check.pass,
                            union_check.pass
                                ? "all maximizers decompose"
                                : subsets_to_string(union_check.witnesses, ground)});

  const SetFunction objective = induced_objective(linkage, ground);
  const auto closure_check = check_intersection_closure(objective, outcome.oracle);
  outcome.checks.push_back({"intersection-closure", closure_check.pass,
                            std::to_string(outcome.oracle.all_maximizers.size()) +
                                " maximizers checked pairwise"});

  const auto qc = check_quasi_concavity(objective, ground, quasi_concavity_trials,
                                        seed, tolerance);
  outcome.checks.push_back({"quasi-concavity-fuzz", qc.ok(),
                            std::to_string(qc.violation_count) + " violations in " +
                                std::to_string(qc.trials) + " trials"});

  return outcome;
}

}  // namespace qcso
