// Command-line surface: select diverse subsets, compute dcov matrices,
// verify against the exhaustive oracle, and benchmark worker scaling.
//
//   qcso select --input data.csv --linkage dcov --output result.json
//   qcso select --input w.csv --linkage weights --labels A,B,C
//   qcso dcov   --input data.csv --output matrix.csv
//   qcso verify --input w.csv --linkage weights
//   qcso bench  --synthetic 2000 --workers 1,2,4 --output timings.csv
//
// Exit codes: 0 success, 1 internal failure, 2 input/format error,
// 3 domain error, 4 verification failure.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcso/dcov.hpp"
#include "qcso/engine.hpp"
#include "qcso/io.hpp"
#include "qcso/rand.hpp"
#include "qcso/report.hpp"
#include "qcso/verify.hpp"
#include "qcso/version.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonArgs {
  std::string input;
  std::string linkage = "weights";
  std::string distance = "squared";
  bool normalize = true;
  int workers = 0;
  double tolerance = 1e-9;
  std::string output;
  std::uint64_t seed = 12345;
  bool diagnostics = false;
  std::string labels;
};

void add_common_options(CLI::App* cmd, CommonArgs* args, bool with_linkage,
                        bool with_worker_count = true) {
  cmd->add_option("--input", args->input, "input CSV path");
  if (with_linkage) {
    cmd->add_option("--linkage", args->linkage, "linkage kind: dcov | weights")
        ->check(CLI::IsMember({"dcov", "weights"}));
  }
  cmd->add_option("--distance", args->distance, "distance mode: squared | euclidean")
      ->check(CLI::IsMember({"squared", "euclidean"}));
  cmd->add_flag("--normalize,!--no-normalize", args->normalize,
                "z-score columns before dcov (default on)");
  if (with_worker_count) {
    cmd->add_option("--workers", args->workers, "worker count, 0 = auto")
        ->check(CLI::NonNegativeNumber);
  }
  cmd->add_option("--tol", args->tolerance, "value-equality tolerance");
  cmd->add_option("--output", args->output, "output path, default stdout");
  cmd->add_option("--seed", args->seed, "rng seed for verification fuzz");
  cmd->add_option("--labels", args->labels,
                  "comma-separated element labels for weight-matrix inputs");
}

qcso::Manifest make_manifest(const std::string& command, const CommonArgs& args) {
  qcso::Manifest m;
  m.command = command;
  m.input = args.input;
  m.linkage = args.linkage;
  m.distance = args.distance;
  m.normalize = args.normalize;
  m.tolerance = args.tolerance;
  m.output = args.output.empty() ? "-" : args.output;
  return m;
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
  } else {
    qcso::write_text_file(output_path, content);
  }
}

std::vector<std::string> parse_labels(const std::string& csv, std::size_t n) {
  if (csv.empty()) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return labels;
  }
  std::vector<std::string> labels;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      labels.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  labels.push_back(current);
  if (labels.size() != n) {
    throw qcso::InputError("--labels needs " + std::to_string(n) + " entries, got " +
                           std::to_string(labels.size()));
  }
  return labels;
}

struct LoadedProblem {
  qcso::GroundSet ground;
  std::shared_ptr<const qcso::LinkageEvaluator> linkage;
};

LoadedProblem load_problem(const CommonArgs& args) {
  if (args.input.empty()) {
    throw qcso::InputError("--input is required");
  }
  if (args.linkage == "weights") {
    qcso::SquareMatrix w = qcso::read_weight_csv(args.input);
    auto labels = parse_labels(args.labels, w.n);
    if (w.n < 2) {
      throw std::domain_error("selection needs at least 2 elements, got " +
                              std::to_string(w.n));
    }
    return {qcso::GroundSet(std::move(labels)),
            std::make_shared<qcso::PairwiseSumLinkage>(std::move(w))};
  }

  qcso::DataMatrix data = qcso::read_data_csv(args.input);
  if (data.cols < 2) {
    throw std::domain_error("selection needs at least 2 feature columns, got " +
                            std::to_string(data.cols));
  }
  std::vector<std::string> labels = data.labels;
  qcso::PairwiseOptions opts;
  opts.mode = qcso::parse_distance_mode(args.distance);
  opts.workers = args.workers;
  if (args.normalize) {
    qcso::NormalizeOutcome normalized = qcso::normalize_columns(data);
    if (normalized.constant_columns.size() == data.cols) {
      throw std::domain_error("all feature columns are constant");
    }
    for (std::size_t c : normalized.constant_columns) {
      std::cerr << "warning: column '" << labels[c] << "' is constant, zeroed\n";
    }
    data = std::move(normalized.data);
  }
  std::vector<std::string> warnings;
  auto linkage = qcso::dcov_linkage(data, opts, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return {qcso::GroundSet(std::move(labels)), std::move(linkage)};
}

std::size_t oracle_cap_from_env() {
  if (const char* env = std::getenv("QCSO_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 2) return cap;
    std::cerr << "warning: ignoring malformed QCSO_ORACLE_CAP='" << env << "'\n";
  }
  return qcso::kDefaultOracleCap;
}

int cmd_select(const CommonArgs& args) {
  const LoadedProblem problem = load_problem(args);
  qcso::RunConfig config;
  config.workers = args.workers;
  config.tolerance = args.tolerance;
  config.collect_diagnostics = args.diagnostics;
  config.rng_seed = args.seed;
  const qcso::SelectionResult result = qcso::run(*problem.linkage, problem.ground, config);
  emit(args.output, qcso::render_select_document(make_manifest("select", args), result,
                                                 problem.ground, args.diagnostics));
  return 0;
}

int cmd_dcov(const CommonArgs& args, const std::string& stat) {
  if (args.input.empty()) {
    throw qcso::InputError("--input is required");
  }
  qcso::DataMatrix data = qcso::read_data_csv(args.input);
  std::vector<std::string> labels = data.labels;
  if (args.normalize) {
    qcso::NormalizeOutcome normalized = qcso::normalize_columns(data);
    for (std::size_t c : normalized.constant_columns) {
      std::cerr << "warning: column '" << labels[c] << "' is constant, zeroed\n";
    }
    data = std::move(normalized.data);
  }
  qcso::PairwiseOptions opts;
  opts.mode = qcso::parse_distance_mode(args.distance);
  opts.workers = args.workers;
  qcso::SquareMatrix matrix = qcso::pairwise_dcov_matrix(data, opts);
  if (stat == "dcor") matrix = qcso::dcor_from_dcov(matrix);
  qcso::Manifest manifest = make_manifest("dcov", args);
  manifest.linkage = "dcov";
  emit(args.output, qcso::render_matrix_csv(manifest, labels, matrix));
  return 0;
}

int cmd_verify(const CommonArgs& args) {
  const LoadedProblem problem = load_problem(args);
  const qcso::VerifyOutcome outcome =
      qcso::run_verification(*problem.linkage, problem.ground, args.tolerance,
                             args.seed, 10000, oracle_cap_from_env());
  emit(args.output, qcso::render_verify_document(make_manifest("verify", args), outcome,
                                                 problem.ground));
  for (const qcso::VerifyCheck& check : outcome.checks) {
    std::cerr << (check.pass ? "pass" : "FAIL") << "  " << check.name << ": "
              << check.detail << "\n";
  }
  return outcome.all_pass() ? 0 : kExitVerifyFailed;
}

std::vector<int> parse_worker_list(const std::string& text) {
  std::vector<int> workers;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) {
      throw qcso::InputError("malformed worker list: '" + text + "'");
    }
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(current, &pos);
    } catch (const std::exception&) {
      throw qcso::InputError("malformed worker list: '" + text + "'");
    }
    if (pos != current.size() || value < 1) {
      throw qcso::InputError("malformed worker list: '" + text + "'");
    }
    workers.push_back(value);
    current.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return workers;
}

int cmd_bench(const CommonArgs& args, const std::string& worker_list,
              std::size_t synthetic_n) {
  const std::vector<int> workers = parse_worker_list(worker_list);

  qcso::LinkageBuilder builder;
  std::optional<qcso::GroundSet> ground;
  if (synthetic_n > 0) {
    if (synthetic_n < 2) throw std::domain_error("synthetic size must be >= 2");
    ground = qcso::GroundSet::with_default_labels(synthetic_n);
    const std::uint64_t seed = args.seed;
    builder = [synthetic_n, seed](int) {
      qcso::Rng rng(seed);
      qcso::SquareMatrix w(synthetic_n);
      for (std::size_t i = 0; i < synthetic_n; ++i) {
        for (std::size_t j = i + 1; j < synthetic_n; ++j) {
          const double v = rng.uniform01();
          w(i, j) = v;
          w(j, i) = v;
        }
      }
      return std::make_shared<const qcso::PairwiseSumLinkage>(std::move(w));
    };
  } else if (args.linkage == "weights") {
    if (args.input.empty()) {
      throw qcso::InputError("--input or --synthetic is required");
    }
    const qcso::SquareMatrix w = qcso::read_weight_csv(args.input);
    if (w.n < 2) throw std::domain_error("benchmark needs at least 2 elements");
    ground = qcso::GroundSet(parse_labels(args.labels, w.n));
    builder = [w](int) { return std::make_shared<const qcso::PairwiseSumLinkage>(w); };
  } else {
    if (args.input.empty()) {
      throw qcso::InputError("--input or --synthetic is required");
    }
    qcso::DataMatrix data = qcso::read_data_csv(args.input);
    if (data.cols < 2) throw std::domain_error("benchmark needs at least 2 columns");
    ground = qcso::GroundSet(data.labels);
    if (args.normalize) data = std::move(qcso::normalize_columns(data).data);
    const qcso::DistanceMode mode = qcso::parse_distance_mode(args.distance);
    builder = [data, mode](int w) {
      qcso::PairwiseOptions opts;
      opts.mode = mode;
      opts.workers = w;
      return qcso::dcov_linkage(data, opts);
    };
  }

  const std::vector<qcso::BenchmarkRow> rows =
      qcso::benchmark(builder, *ground, workers, args.tolerance);
  qcso::Manifest manifest = make_manifest("bench", args);
  if (synthetic_n > 0) {
    manifest.input = "synthetic:" + std::to_string(synthetic_n);
  }
  emit(args.output, qcso::render_bench_csv(manifest, rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(qcso::kToolName) +
               " - globally optimal maxi-min diverse subset selection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qcso::kToolVersion);

  CommonArgs select_args, dcov_args, verify_args, bench_args;
  std::string dcov_stat = "dcov";
  std::string bench_workers = "1";
  std::size_t bench_synthetic = 0;

  CLI::App* select = app.add_subcommand("select", "find all minimal maximizers");
  add_common_options(select, &select_args, true);
  select->add_flag("--diagnostics", select_args.diagnostics,
                   "include per-start cluster diagnostics in the output");

  CLI::App* dcov = app.add_subcommand("dcov", "pairwise distance covariance matrix");
  add_common_options(dcov, &dcov_args, false);
  dcov->add_option("--stat", dcov_stat, "matrix to write: dcov | dcor")
      ->check(CLI::IsMember({"dcov", "dcor"}));

  CLI::App* verify = app.add_subcommand("verify", "cross-check against the oracle");
  add_common_options(verify, &verify_args, true);

  CLI::App* bench = app.add_subcommand("bench", "benchmark worker scaling");
  add_common_options(bench, &bench_args, true, /*with_worker_count=*/false);
  bench->add_option("--workers", bench_workers, "comma-separated worker counts");
  bench->add_option("--synthetic", bench_synthetic,
                    "benchmark a synthetic N x N weight instance instead of --input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (select->parsed()) return cmd_select(select_args);
    if (dcov->parsed()) return cmd_dcov(dcov_args, dcov_stat);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (bench->parsed()) return cmd_bench(bench_args, bench_workers, bench_synthetic);
    return kExitInternal;
  } catch (const qcso::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
