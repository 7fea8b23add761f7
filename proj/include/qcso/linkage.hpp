#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qcso/ground.hpp"
#include "qcso/matrix.hpp"

namespace qcso {

// Mutable per-worker companion of a LinkageEvaluator. Tracks a growing
// prefix so that score(i) returns the linkage of i against the current
// prefix without a full re-evaluation. Never share an instance across
// workers.
class PrefixScorer {
 public:
  virtual ~PrefixScorer() = default;

  // Adds an element to the prefix.
  virtual void push(std::uint32_t element) = 0;

  // Linkage of `element` against the current prefix. Only meaningful for
  // elements outside the prefix and a nonempty prefix.
  virtual double score(std::uint32_t element) const = 0;
};

// Element-to-set linkage. Larger values mean the element is more
// novel/diverse relative to the set. Implementations must be immutable
// after construction and safe for concurrent evaluate() calls.
class LinkageEvaluator {
 public:
  virtual ~LinkageEvaluator() = default;

  // Number of elements the linkage is defined over.
  virtual std::size_t size() const = 0;

  // Point evaluation of the linkage for `element` outside `members`.
  virtual double evaluate(std::uint32_t element, const Subset& members) const = 0;

  // Fresh scorer positioned at the empty prefix.
  virtual std::unique_ptr<PrefixScorer> make_scorer() const = 0;
};

// Linkage of the form pi(i, S) = -sum_{j in S} W[i][j] over a nonnegative
// weight matrix with zero diagonal. Nonnegativity gives the defining
// monotonicity: growing S can only lower the score of an outside element.
// W need not be symmetric.
class PairwiseSumLinkage final : public LinkageEvaluator {
 public:
  // Rejects non-finite or negative entries and a nonzero diagonal.
  explicit PairwiseSumLinkage(SquareMatrix weights);

  std::size_t size() const override { return weights_.n; }
  double evaluate(std::uint32_t element, const Subset& members) const override;
  std::unique_ptr<PrefixScorer> make_scorer() const override;

  const SquareMatrix& weights() const { return weights_; }

 private:
  SquareMatrix weights_;
  SquareMatrix transposed_;  // scorer sweeps read contiguous rows of this
};

using SetFunction = std::function<double(const Subset&)>;

// Discrete derivative pi(e, X) = f(X u {e}) - f(X) of a caller-supplied set
// function. Monotone linkage whenever f is submodular; use
// check_monotone_linkage to detect a non-submodular f. The scorer
// re-evaluates f per step, no incremental structure is assumed.
class SubmodularMarginalLinkage final : public LinkageEvaluator {
 public:
  SubmodularMarginalLinkage(std::size_t n, SetFunction f);

  std::size_t size() const override { return n_; }
  double evaluate(std::uint32_t element, const Subset& members) const override;
  std::unique_ptr<PrefixScorer> make_scorer() const override;

 private:
  std::size_t n_;
  SetFunction f_;
};

struct MonotonicityViolation {
  std::uint32_t element = 0;
  Subset smaller;
  Subset larger;
  double pi_smaller = 0.0;
  double pi_larger = 0.0;
};

struct MonotonicityReport {
  std::size_t trials = 0;
  std::size_t violation_count = 0;
  std::vector<MonotonicityViolation> witnesses;  // capped sample

  bool ok() const { return violation_count == 0; }
};

// Statistical check of the monotone linkage law: samples random chains
// S subset T subset X and i outside T, and reports every triple with
// pi(i, S) < pi(i, T) - tolerance. An empty report is a pass, not a proof.
MonotonicityReport check_monotone_linkage(const LinkageEvaluator& linkage,
                                          const GroundSet& ground,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          double tolerance = 1e-9);

}  // namespace qcso
