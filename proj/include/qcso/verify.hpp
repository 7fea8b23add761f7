#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcso/engine.hpp"
#include "qcso/oracle.hpp"

namespace qcso {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOutcome {
  SelectionResult engine;
  OracleResult oracle;
  bool agree = false;  // minimal-maximizer sets equal, optimum within tolerance
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
};

// Runs the parallel selection and the exhaustive oracle on the same input
// and cross-checks them: set-of-sets agreement, disjointness of minimal
// maximizers, union decomposition, intersection closure, and a
// quasi-concavity fuzz of the induced objective.
VerifyOutcome run_verification(const LinkageEvaluator& linkage, const GroundSet& ground,
                               double tolerance, std::uint64_t seed,
                               std::size_t quasi_concavity_trials = 10000,
                               std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace qcso
