#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcso/linkage.hpp"
#include "qcso/rand.hpp"

using qcso::GroundSet;
using qcso::PairwiseSumLinkage;
using qcso::Rng;
using qcso::SquareMatrix;
using qcso::Subset;
using qcso::SubmodularMarginalLinkage;

namespace {

SquareMatrix worked_weights() {
  SquareMatrix w(3);
  w(0, 1) = 1;
  w(1, 0) = 1;
  w(0, 2) = 3;
  w(2, 0) = 3;
  w(1, 2) = 5;
  w(2, 1) = 5;
  return w;
}

SquareMatrix random_weights(std::size_t n, Rng& rng) {
  SquareMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = rng.uniform01();
      w(i, j) = v;
      w(j, i) = v;
    }
  }
  return w;
}

// Coverage function over a small universe: f(S) = |union of the sets in S|.
// Universe {1,2,3,4}, A={1,2}, B={2,3}, C={4}.
qcso::SetFunction coverage_f() {
  return [](const Subset& s) {
    bool covered[5] = {};
    if (s.contains(0)) covered[1] = covered[2] = true;
    if (s.contains(1)) covered[2] = covered[3] = true;
    if (s.contains(2)) covered[4] = true;
    int total = 0;
    for (int u = 1; u <= 4; ++u) total += covered[u] ? 1 : 0;
    return static_cast<double>(total);
  };
}

// Deliberately non-monotone evaluator: one negative weight, bypassing
// PairwiseSumLinkage validation.
class NegativeWeightLinkage final : public qcso::LinkageEvaluator {
 public:
  explicit NegativeWeightLinkage(std::size_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  double evaluate(std::uint32_t element, const Subset& members) const override {
    double sum = 0.0;
    members.for_each([&](std::uint32_t j) { sum -= weight(element, j); });
    return sum;
  }
  std::unique_ptr<qcso::PrefixScorer> make_scorer() const override {
    throw std::logic_error("not used");
  }

 private:
  static double weight(std::uint32_t i, std::uint32_t j) {
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return -1.0;
    return 1.0;
  }
  std::size_t n_;
};

}  // namespace

TEST_CASE("pairwise sum point evaluation") {
  const PairwiseSumLinkage linkage(worked_weights());
  CHECK(linkage.evaluate(0, Subset::from_indices(3, {1, 2})) == -4.0);
  CHECK(linkage.evaluate(0, Subset::from_indices(3, {1})) == -1.0);
  CHECK(linkage.evaluate(2, Subset::from_indices(3, {0})) == -3.0);
}

TEST_CASE("zero weights give the constant zero linkage") {
  const PairwiseSumLinkage linkage{SquareMatrix(4)};
  CHECK(linkage.evaluate(3, Subset::from_indices(4, {0, 1, 2})) == 0.0);
}

TEST_CASE("construction rejects bad weight matrices") {
  SquareMatrix negative(2);
  negative(0, 1) = -0.5;
  CHECK_THROWS_AS(PairwiseSumLinkage(std::move(negative)), std::invalid_argument);

  SquareMatrix infinite(2);
  infinite(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(PairwiseSumLinkage(std::move(infinite)), std::invalid_argument);

  SquareMatrix diagonal(2);
  diagonal(1, 1) = 2.0;
  CHECK_THROWS_AS(PairwiseSumLinkage(std::move(diagonal)), std::invalid_argument);

  SquareMatrix ragged(2);
  ragged.data.pop_back();
  CHECK_THROWS_AS(PairwiseSumLinkage(std::move(ragged)), std::invalid_argument);
}

TEST_CASE("scorer state matches fresh evaluation on random prefixes") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + rng.uniform_int(0, 8);
    const PairwiseSumLinkage linkage(random_weights(n, rng));
    auto scorer = linkage.make_scorer();
    Subset prefix(n);

    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(order[i], order[rng.uniform_int(i, n - 1)]);
    }

    const std::size_t prefix_len = 1 + rng.uniform_int(0, n - 2);
    for (std::size_t k = 0; k < prefix_len; ++k) {
      scorer->push(order[k]);
      prefix.insert(order[k]);
    }
    for (std::size_t k = prefix_len; k < n; ++k) {
      const double fresh = linkage.evaluate(order[k], prefix);
      const double scored = scorer->score(order[k]);
      CHECK(std::abs(scored - fresh) <= 1e-12 * (1.0 + std::abs(fresh)));
    }
  }
}

TEST_CASE("monotonicity checker passes random nonnegative weights") {
  Rng rng(7);
  const std::size_t n = 8;
  const PairwiseSumLinkage linkage(random_weights(n, rng));
  const GroundSet ground = GroundSet::with_default_labels(n);
  const auto report = qcso::check_monotone_linkage(linkage, ground, 10000, 1);
  CHECK(report.trials == 10000);
  CHECK(report.ok());
}

TEST_CASE("monotonicity checker flags a negative weight") {
  const NegativeWeightLinkage linkage(5);
  const GroundSet ground = GroundSet::with_default_labels(5);
  const auto report = qcso::check_monotone_linkage(linkage, ground, 5000, 3);
  CHECK(report.violation_count > 0);
  CHECK_FALSE(report.witnesses.empty());
  const auto& w = report.witnesses.front();
  CHECK(linkage.evaluate(w.element, w.smaller) <
        linkage.evaluate(w.element, w.larger));
}

TEST_CASE("checker degenerates gracefully below three elements") {
  const PairwiseSumLinkage linkage{SquareMatrix(2)};
  const GroundSet ground = GroundSet::with_default_labels(2);
  const auto report = qcso::check_monotone_linkage(linkage, ground, 100, 1);
  CHECK(report.trials == 0);
  CHECK(report.ok());
}

TEST_CASE("marginal gain adaptor on the coverage instance") {
  const SubmodularMarginalLinkage linkage(3, coverage_f());
  // pi(B, {A}) = 1, pi(B, {A,C}) = 1, pi(B, {C}) = 2
  CHECK(linkage.evaluate(1, Subset::from_indices(3, {0})) == 1.0);
  CHECK(linkage.evaluate(1, Subset::from_indices(3, {0, 2})) == 1.0);
  CHECK(linkage.evaluate(1, Subset::from_indices(3, {2})) == 2.0);
}

TEST_CASE("zero marginal gain for a fully covered element") {
  // A={1,2} and B={2,3} cover everything D={2} adds.
  auto f = [](const Subset& s) {
    bool covered[4] = {};
    if (s.contains(0)) covered[1] = covered[2] = true;
    if (s.contains(1)) covered[2] = covered[3] = true;
    if (s.contains(2)) covered[2] = true;
    int total = 0;
    for (int u = 1; u <= 3; ++u) total += covered[u] ? 1 : 0;
    return static_cast<double>(total);
  };
  const SubmodularMarginalLinkage linkage(3, f);
  CHECK(linkage.evaluate(2, Subset::from_indices(3, {0})) == 0.0);
}

TEST_CASE("modular function has constant derivative") {
  const SubmodularMarginalLinkage linkage(
      4, [](const Subset& s) { return static_cast<double>(s.size()); });
  CHECK(linkage.evaluate(3, Subset::from_indices(4, {0})) == 1.0);
  CHECK(linkage.evaluate(2, Subset::from_indices(4, {0, 1})) == 1.0);
}

TEST_CASE("coverage adaptor satisfies the monotone linkage law") {
  const SubmodularMarginalLinkage linkage(3, coverage_f());
  const GroundSet ground({"A", "B", "C"});
  const auto report = qcso::check_monotone_linkage(linkage, ground, 10000, 5);
  CHECK(report.ok());
}

TEST_CASE("marginal scorer agrees with fresh evaluation") {
  const SubmodularMarginalLinkage linkage(3, coverage_f());
  auto scorer = linkage.make_scorer();
  scorer->push(0);
  CHECK(scorer->score(1) == linkage.evaluate(1, Subset::from_indices(3, {0})));
  CHECK(scorer->score(2) == linkage.evaluate(2, Subset::from_indices(3, {0})));
  scorer->push(2);
  CHECK(scorer->score(1) == linkage.evaluate(1, Subset::from_indices(3, {0, 2})));
}

TEST_CASE("empty set function handle is rejected") {
  CHECK_THROWS_AS(SubmodularMarginalLinkage(3, nullptr), std::invalid_argument);
}
