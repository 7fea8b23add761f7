// Drives the installed binary end to end: commands, file outputs, exit
// codes. Each case runs in its own temp directory.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define E2E_CHECK(cond, what)                                             \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << what \
                << "\n";                                                  \
      ++g_failures;                                                       \
    }                                                                     \
  } while (0)

struct RunOutcome {
  int exit_code = -1;
};

RunOutcome run_tool(const std::string& args, const fs::path& cwd) {
  const std::string cmd = "cd '" + cwd.string() + "' && '" + QCSO_TOOL_PATH + "' " +
                          args + " >stdout.txt 2>stderr.txt";
  const int status = std::system(cmd.c_str());
  RunOutcome outcome;
  if (WIFEXITED(status)) outcome.exit_code = WEXITSTATUS(status);
  return outcome;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qcso_e2e_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

const std::string kWorkedWeights = "0,1,3\n1,0,5\n3,5,0\n";

void test_select_weights() {
  const fs::path dir = fresh_dir("select_weights");
  write(dir / "w.csv", kWorkedWeights);
  const auto outcome = run_tool(
      "select --input w.csv --linkage weights --labels A,B,C --output result.json",
      dir);
  E2E_CHECK(outcome.exit_code == 0, "select exit code " << outcome.exit_code);

  const auto doc = nlohmann::json::parse(slurp(dir / "result.json"));
  E2E_CHECK(doc["optimum"] == -3.0, "optimum " << doc["optimum"]);
  E2E_CHECK(doc["minimal_maximizers"].size() == 1, "maximizer count");
  E2E_CHECK(doc["minimal_maximizers"][0]["labels"] == nlohmann::json::array({"A"}),
            "maximizer labels");
  E2E_CHECK(doc["manifest"]["input"] == "w.csv", "manifest input");
  E2E_CHECK(!doc.contains("clusters"), "clusters without --diagnostics");
}

void test_select_determinism_across_workers() {
  // Same relative output path in separate directories; the bytes must match.
  std::string first;
  for (int workers : {1, 2, 4, 8}) {
    const fs::path dir = fresh_dir("det_w" + std::to_string(workers));
    write(dir / "w.csv", kWorkedWeights);
    const auto outcome =
        run_tool("select --input w.csv --linkage weights --labels A,B,C "
                 "--diagnostics --workers " +
                     std::to_string(workers) + " --output result.json",
                 dir);
    E2E_CHECK(outcome.exit_code == 0, "select exit " << outcome.exit_code);
    const std::string doc = slurp(dir / "result.json");
    if (first.empty()) {
      first = doc;
    } else {
      E2E_CHECK(doc == first, "output differs at workers=" << workers);
    }
  }
}

void test_select_dcov() {
  const fs::path dir = fresh_dir("select_dcov");
  // Two duplicated columns plus one independent column; the independent one
  // is the unique most diverse subset.
  std::ostringstream csv;
  csv << "f1,f2,f3\n";
  unsigned state = 12345;
  auto next01 = [&state]() {
    state = state * 1103515245u + 12345u;
    return static_cast<double>((state >> 16) & 0x7fff) / 32768.0;
  };
  for (int r = 0; r < 60; ++r) {
    const double a = next01();
    const double b = next01();
    csv << a << "," << a << "," << b << "\n";
  }
  write(dir / "data.csv", csv.str());
  const auto outcome =
      run_tool("select --input data.csv --linkage dcov --output result.json", dir);
  E2E_CHECK(outcome.exit_code == 0, "select dcov exit " << outcome.exit_code);
  const auto doc = nlohmann::json::parse(slurp(dir / "result.json"));
  E2E_CHECK(doc["minimal_maximizers"].size() == 1, "dcov maximizer count");
  E2E_CHECK(doc["minimal_maximizers"][0]["labels"] == nlohmann::json::array({"f3"}),
            "independent column wins");
}

void test_dcov_matrix() {
  const fs::path dir = fresh_dir("dcov_matrix");
  write(dir / "one.csv", "x\n0\n1\n2\n");
  const auto outcome =
      run_tool("dcov --input one.csv --no-normalize --output m.csv", dir);
  E2E_CHECK(outcome.exit_code == 0, "dcov exit " << outcome.exit_code);
  const std::string csv = slurp(dir / "m.csv");
  E2E_CHECK(csv.find("x\n") != std::string::npos, "label header");
  const auto last_newline = csv.find_last_not_of('\n');
  const auto line_start = csv.rfind('\n', last_newline);
  const double entry = std::stod(csv.substr(line_start + 1));
  E2E_CHECK(std::abs(entry - 16.0 / 9.0) <= 1e-12, "16/9 entry, got: " << entry);

  // Constant column: zero row/column plus a warning on stderr.
  write(dir / "two.csv", "a,c\n0,5\n1,5\n2,5\n");
  const auto outcome2 = run_tool("dcov --input two.csv --output m2.csv", dir);
  E2E_CHECK(outcome2.exit_code == 0, "dcov exit " << outcome2.exit_code);
  const std::string warn = slurp(dir / "stderr.txt");
  E2E_CHECK(warn.find("constant") != std::string::npos, "constant warning");
  const std::string m2 = slurp(dir / "m2.csv");
  E2E_CHECK(m2.find(",0\n") != std::string::npos, "zero column");
}

void test_verify() {
  const fs::path dir = fresh_dir("verify");
  write(dir / "w.csv", kWorkedWeights);
  const auto ok = run_tool(
      "verify --input w.csv --linkage weights --labels A,B,C --output report.json",
      dir);
  E2E_CHECK(ok.exit_code == 0, "verify exit " << ok.exit_code);
  const auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
  E2E_CHECK(doc["agree"] == true, "verify agree");
  E2E_CHECK(doc["all_pass"] == true, "verify all_pass");
  E2E_CHECK(doc["checks"].size() == 5, "verify check count");

  // Oracle cap: 20 elements exceed the default cap of 16.
  std::ostringstream big;
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 20; ++c) big << (c ? "," : "") << 0;
    big << "\n";
  }
  write(dir / "big.csv", big.str());
  const auto capped = run_tool("verify --input big.csv --linkage weights", dir);
  E2E_CHECK(capped.exit_code == 3, "cap exit " << capped.exit_code);
  E2E_CHECK(slurp(dir / "stderr.txt").find("cap") != std::string::npos,
            "cap message");

  // Environment override lowers the cap below the worked instance.
  const std::string env_cmd = "cd '" + dir.string() + "' && QCSO_ORACLE_CAP=2 '" +
                              QCSO_TOOL_PATH +
                              "' verify --input w.csv --linkage weights "
                              ">stdout.txt 2>stderr.txt";
  const int env_status = std::system(env_cmd.c_str());
  E2E_CHECK(WIFEXITED(env_status) && WEXITSTATUS(env_status) == 3,
            "env cap exit " << WEXITSTATUS(env_status));
}

void test_bench() {
  const fs::path dir = fresh_dir("bench");
  const auto outcome =
      run_tool("bench --synthetic 60 --workers 1,2 --output t.csv", dir);
  E2E_CHECK(outcome.exit_code == 0, "bench exit " << outcome.exit_code);
  const std::string csv = slurp(dir / "t.csv");
  E2E_CHECK(csv.find("phase,workers,milliseconds,speedup\n") != std::string::npos,
            "bench header");
  E2E_CHECK(csv.find("series,1,") != std::string::npos, "series row");
  E2E_CHECK(csv.find("serial_reference,1,") != std::string::npos, "reference row");

  const auto bad = run_tool("bench --synthetic 10 --workers abc", dir);
  E2E_CHECK(bad.exit_code == 2, "malformed workers exit " << bad.exit_code);
}

void test_error_paths() {
  const fs::path dir = fresh_dir("errors");

  const auto missing = run_tool("select --input nope.csv --linkage weights", dir);
  E2E_CHECK(missing.exit_code == 2, "missing file exit " << missing.exit_code);
  E2E_CHECK(slurp(dir / "stderr.txt").find("nope.csv") != std::string::npos,
            "missing file named in message");

  write(dir / "neg.csv", "0,-1\n1,0\n");
  const auto negative = run_tool("select --input neg.csv --linkage weights", dir);
  E2E_CHECK(negative.exit_code == 2, "negative weight exit " << negative.exit_code);

  write(dir / "one_col.csv", "a\n1\n2\n3\n");
  const auto narrow = run_tool("select --input one_col.csv --linkage dcov", dir);
  E2E_CHECK(narrow.exit_code == 3, "single column exit " << narrow.exit_code);

  write(dir / "short.csv", "a,b\n1,2\n3,4\n");
  const auto short_rows = run_tool("select --input short.csv --linkage dcov", dir);
  E2E_CHECK(short_rows.exit_code == 3, "too few rows exit " << short_rows.exit_code);

  write(dir / "const.csv", "a,b\n1,2\n1,2\n1,2\n1,2\n");
  const auto constant = run_tool("select --input const.csv --linkage dcov", dir);
  E2E_CHECK(constant.exit_code == 3, "constant data exit " << constant.exit_code);

  const auto unknown = run_tool("select --input w.csv --linkage magic", dir);
  E2E_CHECK(unknown.exit_code == 2, "bad flag value exit " << unknown.exit_code);
}

}  // namespace

int main() {
  test_select_weights();
  test_select_determinism_across_workers();
  test_select_dcov();
  test_dcov_matrix();
  test_verify();
  test_bench();
  test_error_paths();

  if (g_failures == 0) {
    std::cout << "cli_e2e: all checks passed\n";
    return 0;
  }
  std::cout << "cli_e2e: " << g_failures << " checks failed\n";
  return 1;
}
