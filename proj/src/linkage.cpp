#include "qcso/linkage.hpp"

#include <cmath>
#include <stdexcept>

#include "qcso/rand.hpp"

namespace qcso {

namespace {

class PairwiseSumScorer final : public PrefixScorer {
 public:
  // Takes the transposed weights so the update sweep for a pushed element
  // streams one contiguous row.
  explicit PairwiseSumScorer(const SquareMatrix& transposed)
      : transposed_(transposed), score_(transposed.n, 0.0) {}

  void push(std::uint32_t element) override {
    const std::size_t n = transposed_.n;
    const double* column = transposed_.data.data() + element * n;
    for (std::size_t i = 0; i < n; ++i) {
      score_[i] -= column[i];
    }
  }

  double score(std::uint32_t element) const override { return score_[element]; }

 private:
  const SquareMatrix& transposed_;
  std::vector<double> score_;
};

class MarginalGainScorer final : public PrefixScorer {
 public:
  MarginalGainScorer(std::size_t n, const SetFunction& f)
      : f_(f), prefix_(n), f_prefix_(0.0), prefix_valued_(false) {}

  void push(std::uint32_t element) override {
    prefix_.insert(element);
    f_prefix_ = f_(prefix_);
    prefix_valued_ = true;
  }

  double score(std::uint32_t element) const override {
    Subset extended = prefix_;
    extended.insert(element);
    const double base = prefix_valued_ ? f_prefix_ : f_(prefix_);
    return f_(extended) - base;
  }

 private:
  const SetFunction& f_;
  Subset prefix_;
  double f_prefix_;
  bool prefix_valued_;
};

}  // namespace

PairwiseSumLinkage::PairwiseSumLinkage(SquareMatrix weights)
    : weights_(std::move(weights)) {
  const std::size_t n = weights_.n;
  if (weights_.data.size() != n * n) {
    throw std::invalid_argument("weight matrix storage does not match its size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w)) {
        throw std::invalid_argument("non-finite weight at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
      if (w < 0.0) {
        throw std::invalid_argument("negative weight at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
    if (weights_(i, i) != 0.0) {
      throw std::invalid_argument("nonzero diagonal weight at (" + std::to_string(i) +
                                  "," + std::to_string(i) + ")");
    }
  }
  transposed_ = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed_(j, i) = weights_(i, j);
  }
}

double PairwiseSumLinkage::evaluate(std::uint32_t element, const Subset& members) const {
  double sum = 0.0;
  members.for_each([&](std::uint32_t j) { sum -= weights_(element, j); });
  return sum;
}

std::unique_ptr<PrefixScorer> PairwiseSumLinkage::make_scorer() const {
  return std::make_unique<PairwiseSumScorer>(transposed_);
}

SubmodularMarginalLinkage::SubmodularMarginalLinkage(std::size_t n, SetFunction f)
    : n_(n), f_(std::move(f)) {
  if (!f_) throw std::invalid_argument("set function handle is empty");
}

double SubmodularMarginalLinkage::evaluate(std::uint32_t element,
                                           const Subset& members) const {
  Subset extended = members;
  extended.insert(element);
  return f_(extended) - f_(members);
}

std::unique_ptr<PrefixScorer> SubmodularMarginalLinkage::make_scorer() const {
  return std::make_unique<MarginalGainScorer>(n_, f_);
}

MonotonicityReport check_monotone_linkage(const LinkageEvaluator& linkage,
                                          const GroundSet& ground,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          double tolerance) {
  constexpr std::size_t kMaxWitnesses = 16;
  const std::size_t n = ground.size();
  MonotonicityReport report;
  // A chain S subset T subset X with an element outside T needs |T| >= 2.
  if (n < 3) return report;

  Rng rng(seed);
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Partial Fisher-Yates: the first |T| entries of pool become T.
    const std::size_t size_t_set = rng.uniform_int(2, n - 1);
    for (std::size_t k = 0; k < size_t_set; ++k) {
      const std::size_t j = rng.uniform_int(k, n - 1);
      std::swap(pool[k], pool[j]);
    }
    Subset larger(n);
    for (std::size_t k = 0; k < size_t_set; ++k) larger.insert(pool[k]);

    const std::size_t size_s_set = rng.uniform_int(1, size_t_set - 1);
    for (std::size_t k = 0; k < size_s_set; ++k) {
      const std::size_t j = rng.uniform_int(k, size_t_set - 1);
      std::swap(pool[k], pool[j]);
    }
    Subset smaller(n);
    for (std::size_t k = 0; k < size_s_set; ++k) smaller.insert(pool[k]);

    const std::uint32_t outside = pool[size_t_set + rng.uniform_int(0, n - size_t_set - 1)];

    const double pi_s = linkage.evaluate(outside, smaller);
    const double pi_t = linkage.evaluate(outside, larger);
    ++report.trials;
    if (pi_s < pi_t - tolerance) {
      ++report.violation_count;
      if (report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({outside, smaller, larger, pi_s, pi_t});
      }
    }
  }
  return report;
}

}  // namespace qcso
