#include "qcso/dcov.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcso/rand.hpp"

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

double centered_inner(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t total = a.data.size();
  double sum = 0.0;
  for (std::size_t k = 0; k < total; ++k) sum += a.data[k] * b.data[k];
  return sum / (static_cast<double>(a.n) * static_cast<double>(a.n));
}

// The inner product of two double-centered distance matrices is
// nonnegative in both modes; anything below zero is rounding dust and is
// clamped so downstream nonnegativity contracts hold exactly.
double centered_inner_clamped(const SquareMatrix& a, const SquareMatrix& b) {
  const double v = centered_inner(a, b);
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

const char* distance_mode_name(DistanceMode mode) {
  return mode == DistanceMode::kSquaredEuclidean ? "squared" : "euclidean";
}

DistanceMode parse_distance_mode(const std::string& name) {
  if (name == "squared") return DistanceMode::kSquaredEuclidean;
  if (name == "euclidean") return DistanceMode::kEuclidean;
  throw std::invalid_argument("unknown distance mode: " + name);
}

SquareMatrix distance_matrix(std::span<const double> x, DistanceMode mode) {
  const std::size_t n = x.size();
  SquareMatrix e(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const double d = std::abs(x[k] - x[l]);
      const double v = mode == DistanceMode::kSquaredEuclidean ? d * d : d;
      e(k, l) = v;
      e(l, k) = v;
    }
  }
  return e;
}

SquareMatrix double_center(const SquareMatrix& e) {
  const std::size_t n = e.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!std::isfinite(e(i, j)) || !std::isfinite(e(j, i))) {
        throw std::invalid_argument("non-finite distance entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (e(i, j) != e(j, i)) {
        throw std::invalid_argument("asymmetric distance matrix at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += e(i, j);
    row_mean[i] = s / static_cast<double>(n);
    grand += s;
  }
  grand /= static_cast<double>(n) * static_cast<double>(n);

  // Column means equal row means by symmetry; the upper triangle is
  // mirrored so the output is exactly symmetric.
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = e(i, j) - row_mean[i] - row_mean[j] + grand;
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

double sample_dcov(std::span<const double> x, std::span<const double> y,
                   DistanceMode mode) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sample length mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
  }
  if (x.size() < 3) {
    throw std::domain_error("distance covariance needs at least 3 samples, got " +
                            std::to_string(x.size()));
  }
  const SquareMatrix ex = double_center(distance_matrix(x, mode));
  const SquareMatrix ey = double_center(distance_matrix(y, mode));
  return centered_inner(ex, ey);
}

double sample_dcor(std::span<const double> x, std::span<const double> y,
                   DistanceMode mode) {
  const double vxy = sample_dcov(x, y, mode);
  const double vxx = sample_dcov(x, x, mode);
  const double vyy = sample_dcov(y, y, mode);
  const double denom2 = vxx * vyy;
  if (denom2 <= 0.0) return 0.0;
  return vxy / std::sqrt(denom2);
}

NormalizeOutcome normalize_columns(const DataMatrix& data) {
  NormalizeOutcome out;
  out.data = data;
  const std::size_t n = data.rows;
  for (std::size_t c = 0; c < data.cols; ++c) {
    double* col = out.data.values.data() + c * n;
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += col[r];
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double d = col[r] - mean;
      ss += d * d;
    }
    const double sd = n >= 2 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    if (sd == 0.0) {
      for (std::size_t r = 0; r < n; ++r) col[r] = 0.0;
      out.constant_columns.push_back(c);
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) col[r] = (col[r] - mean) / sd;
  }
  return out;
}

SquareMatrix pairwise_dcov_matrix(const DataMatrix& data, const PairwiseOptions& opts) {
  const std::size_t n = data.rows;
  const std::size_t cols = data.cols;
  if (n < 3) {
    throw std::domain_error("distance covariance needs at least 3 samples, got " +
                            std::to_string(n));
  }
  if (cols == 0) {
    throw std::domain_error("no feature columns");
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(cols * (cols + 1) / 2);
  for (std::uint32_t i = 0; i < cols; ++i) {
    for (std::uint32_t j = i; j < cols; ++j) pairs.emplace_back(i, j);
  }

  SquareMatrix d(cols);
  const int nw = effective_workers(opts.workers);
  const bool materialize = cols * n * n * sizeof(double) <= opts.memory_budget_bytes;

  if (materialize) {
    std::vector<SquareMatrix> centered(cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nw)
#endif
    for (long long c = 0; c < static_cast<long long>(cols); ++c) {
      centered[c] = double_center(distance_matrix(data.column(c), opts.mode));
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nw)
#endif
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
      const auto [i, j] = pairs[p];
      const double v = centered_inner_clamped(centered[i], centered[j]);
      d(i, j) = v;
      d(j, i) = v;
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nw)
#endif
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
      const auto [i, j] = pairs[p];
      const SquareMatrix ei = double_center(distance_matrix(data.column(i), opts.mode));
      const SquareMatrix ej =
          i == j ? ei : double_center(distance_matrix(data.column(j), opts.mode));
      const double v = centered_inner_clamped(ei, ej);
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return d;
}

SquareMatrix dcor_from_dcov(const SquareMatrix& dcov) {
  const std::size_t n = dcov.n;
  SquareMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double denom2 = dcov(i, i) * dcov(j, j);
      r(i, j) = denom2 > 0.0 ? dcov(i, j) / std::sqrt(denom2) : 0.0;
    }
  }
  return r;
}

std::shared_ptr<PairwiseSumLinkage> dcov_linkage(const DataMatrix& data,
                                                 const PairwiseOptions& opts,
                                                 std::vector<std::string>* warnings) {
  SquareMatrix d = pairwise_dcov_matrix(data, opts);
  double max_offdiag = 0.0;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) {
      if (i == j) continue;
      max_offdiag = std::max(max_offdiag, std::abs(d(i, j)));
    }
    d(i, i) = 0.0;  // self-dependence never enters the sum
  }
  if (warnings != nullptr && max_offdiag < 1e-12) {
    warnings->push_back(
        "pairwise distance covariances are numerically zero; the objective is "
        "degenerate and every subset is equally diverse");
  }
  return std::make_shared<PairwiseSumLinkage>(std::move(d));
}

KosorokReport kosorok_smoke_test(std::size_t n_samples, std::uint64_t seed,
                                 int trials, double pass_fraction) {
  if (n_samples < 3) {
    throw std::domain_error("smoke test needs at least 3 samples");
  }
  KosorokReport report;
  report.trials = trials;

  std::vector<char> held(trials, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < trials; ++t) {
    // Per-trial stream keeps the outcome independent of thread count.
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    std::vector<double> x(n_samples), y(n_samples), xz(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
      x[k] = rng.gauss();
      y[k] = x[k] + 0.25 * rng.gauss();
      xz[k] = x[k] + rng.gauss();
    }
    const double with_noise = sample_dcov(xz, y, DistanceMode::kEuclidean);
    const double without = sample_dcov(x, y, DistanceMode::kEuclidean);
    held[t] = with_noise <= without ? 1 : 0;
  }
  for (char h : held) report.holds += h;
  report.fraction = trials > 0 ? static_cast<double>(report.holds) / trials : 0.0;
  report.passed = report.fraction >= pass_fraction;
  return report;
}

}  // namespace qcso
