#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "qcso/engine.hpp"
#include "qcso/io.hpp"
#include "qcso/report.hpp"

namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

qcso::Manifest sample_manifest() {
  qcso::Manifest m;
  m.command = "select";
  m.input = "w.csv";
  m.linkage = "weights";
  m.distance = "squared";
  m.normalize = true;
  m.tolerance = 1e-9;
  m.output = "-";
  return m;
}

}  // namespace

TEST_CASE("weight csv round trip") {
  const auto path = write_temp("qcso_w.csv", "0,1,3\n1,0,5\n3,5,0\n");
  const qcso::SquareMatrix w = qcso::read_weight_csv(path.string());
  REQUIRE(w.n == 3);
  CHECK(w(0, 1) == 1.0);
  CHECK(w(2, 1) == 5.0);
  CHECK(w(2, 2) == 0.0);
}

TEST_CASE("data csv with header labels") {
  const auto path = write_temp("qcso_d.csv", "a,b\n0,1\n1,2\n2,3\n");
  const qcso::DataMatrix data = qcso::read_data_csv(path.string());
  CHECK(data.labels == std::vector<std::string>{"a", "b"});
  REQUIRE(data.rows == 3);
  CHECK(data.at(2, 0) == 2.0);
  CHECK(data.at(0, 1) == 1.0);
}

TEST_CASE("csv errors carry file, row and column") {
  CHECK_THROWS_WITH_AS(qcso::read_weight_csv("/nonexistent/x.csv"),
                       doctest::Contains("/nonexistent/x.csv"), qcso::InputError);

  const auto ragged = write_temp("qcso_ragged.csv", "0,1\n1\n");
  CHECK_THROWS_WITH_AS(qcso::read_weight_csv(ragged.string()),
                       doctest::Contains("row 2"), qcso::InputError);

  const auto garbage = write_temp("qcso_garbage.csv", "a,b\n0,oops\n1,1\n2,2\n");
  CHECK_THROWS_WITH_AS(qcso::read_data_csv(garbage.string()),
                       doctest::Contains("column 2"), qcso::InputError);

  const auto missing = write_temp("qcso_missing.csv", "a,b\n0,\n1,1\n2,2\n");
  CHECK_THROWS_WITH_AS(qcso::read_data_csv(missing.string()),
                       doctest::Contains("missing value"), qcso::InputError);

  const auto nan = write_temp("qcso_nan.csv", "a,b\n0,nan\n1,1\n2,2\n");
  CHECK_THROWS_AS(qcso::read_data_csv(nan.string()), qcso::InputError);

  const auto empty = write_temp("qcso_empty.csv", "");
  CHECK_THROWS_AS(qcso::read_data_csv(empty.string()), qcso::InputError);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.0, -3.0, 16.0 / 9.0, 1e-9, 123456.789}) {
    CHECK(std::stod(qcso::format_double(v)) == v);
  }
}

TEST_CASE("select document parses back with matching fields") {
  const qcso::GroundSet ground({"A", "B", "C"});
  qcso::SquareMatrix w(3);
  w(0, 1) = w(1, 0) = 1;
  w(0, 2) = w(2, 0) = 3;
  w(1, 2) = w(2, 1) = 5;
  const qcso::PairwiseSumLinkage linkage(std::move(w));
  qcso::RunConfig config;
  config.collect_diagnostics = true;
  const auto result = qcso::run(linkage, ground, config);

  const std::string doc =
      qcso::render_select_document(sample_manifest(), result, ground, true);
  const auto parsed = nlohmann::json::parse(doc);

  CHECK(parsed["manifest"]["tool"] == "qcso");
  CHECK(parsed["manifest"]["command"] == "select");
  CHECK(parsed["manifest"]["input"] == "w.csv");
  CHECK(parsed["manifest"]["tolerance"] == 1e-9);
  CHECK(parsed["optimum"] == -3.0);
  REQUIRE(parsed["minimal_maximizers"].size() == 1);
  CHECK(parsed["minimal_maximizers"][0]["labels"] ==
        nlohmann::json::array({"A"}));
  CHECK(parsed["minimal_maximizers"][0]["value"] == -3.0);
  REQUIRE(parsed["clusters"].size() == 3);
  CHECK(parsed["clusters"][1]["start"] == "B");
  CHECK(parsed["clusters"][1]["prefix_len"] == 2);

  // Without diagnostics the clusters key is absent.
  const std::string lean =
      qcso::render_select_document(sample_manifest(), result, ground, false);
  CHECK_FALSE(nlohmann::json::parse(lean).contains("clusters"));
}

TEST_CASE("matrix csv renders manifest comments, labels and rows") {
  qcso::SquareMatrix d(2);
  d(0, 0) = 1.5;
  d(0, 1) = d(1, 0) = 0.25;
  d(1, 1) = 2.0;
  const std::string csv = qcso::render_matrix_csv(sample_manifest(), {"a", "b"}, d);
  CHECK(csv.find("# tool=qcso") != std::string::npos);
  CHECK(csv.find("a,b\n") != std::string::npos);
  CHECK(csv.find("1.5,0.25\n") != std::string::npos);
  CHECK(csv.find("0.25,2\n") != std::string::npos);
}

TEST_CASE("bench csv has the documented header and row shape") {
  const std::vector<qcso::BenchmarkRow> rows{
      {"precompute", 1, 10.0, 1.0},
      {"series", 1, 100.0, 1.0},
      {"series", 4, 25.0, 4.0},
  };
  const std::string csv = qcso::render_bench_csv(sample_manifest(), rows);
  CHECK(csv.find("phase,workers,milliseconds,speedup\n") != std::string::npos);
  CHECK(csv.find("series,4,25,4\n") != std::string::npos);
}
