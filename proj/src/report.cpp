#include "qcso/report.hpp"

#include <json.hpp>

#include "qcso/io.hpp"
#include "qcso/version.hpp"

namespace qcso {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json manifest_json(const Manifest& manifest) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = manifest.command;
  j["input"] = manifest.input;
  j["linkage"] = manifest.linkage;
  j["distance"] = manifest.distance;
  j["normalize"] = manifest.normalize;
  j["tolerance"] = manifest.tolerance;
  j["output"] = manifest.output;
  return j;
}

std::vector<std::string> subset_labels(const Subset& members, const GroundSet& ground) {
  std::vector<std::string> labels;
  labels.reserve(members.size());
  members.for_each([&](std::uint32_t e) { labels.push_back(ground.label(e)); });
  return labels;
}

std::string manifest_comment_lines(const Manifest& manifest) {
  std::string out;
  out += "# tool=" + std::string(kToolName) + " version=" + kToolVersion + "\n";
  out += "# command=" + manifest.command + "\n";
  out += "# input=" + manifest.input + "\n";
  out += "# linkage=" + manifest.linkage + "\n";
  out += "# distance=" + manifest.distance + "\n";
  out += std::string("# normalize=") + (manifest.normalize ? "true" : "false") + "\n";
  out += "# tolerance=" + format_double(manifest.tolerance) + "\n";
  out += "# output=" + manifest.output + "\n";
  return out;
}

}  // namespace

std::string render_select_document(const Manifest& manifest,
                                   const SelectionResult& result,
                                   const GroundSet& ground, bool include_clusters) {
  ordered_json doc;
  doc["manifest"] = manifest_json(manifest);
  doc["optimum"] = result.optimum;
  ordered_json maximizers = ordered_json::array();
  for (const Maximizer& m : result.minimal_maximizers) {
    ordered_json entry;
    entry["labels"] = subset_labels(m.members, ground);
    entry["value"] = m.value;
    maximizers.push_back(std::move(entry));
  }
  doc["minimal_maximizers"] = std::move(maximizers);
  if (include_clusters) {
    ordered_json clusters = ordered_json::array();
    for (const PiCluster& c : result.clusters) {
      ordered_json entry;
      entry["start"] = ground.label(c.start);
      entry["prefix_len"] = c.prefix_len;
      entry["labels"] = subset_labels(c.members, ground);
      entry["value"] = c.value;
      clusters.push_back(std::move(entry));
    }
    doc["clusters"] = std::move(clusters);
  }
  return doc.dump(2) + "\n";
}

std::string render_verify_document(const Manifest& manifest,
                                   const VerifyOutcome& outcome,
                                   const GroundSet& ground) {
  ordered_json doc;
  doc["manifest"] = manifest_json(manifest);
  doc["agree"] = outcome.agree;
  doc["all_pass"] = outcome.all_pass();
  ordered_json checks = ordered_json::array();
  for (const VerifyCheck& c : outcome.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);

  auto side = [&ground](double optimum, const std::vector<Subset>& sets) {
    ordered_json j;
    j["optimum"] = optimum;
    ordered_json lists = ordered_json::array();
    for (const Subset& s : sets) lists.push_back(subset_labels(s, ground));
    j["minimal_maximizers"] = std::move(lists);
    return j;
  };
  std::vector<Subset> engine_sets;
  for (const Maximizer& m : outcome.engine.minimal_maximizers) {
    engine_sets.push_back(m.members);
  }
  doc["engine"] = side(outcome.engine.optimum, engine_sets);
  doc["oracle"] = side(outcome.oracle.optimum, outcome.oracle.minimal_maximizers);
  return doc.dump(2) + "\n";
}

std::string render_matrix_csv(const Manifest& manifest,
                              const std::vector<std::string>& labels,
                              const SquareMatrix& matrix) {
  std::string out = manifest_comment_lines(manifest);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (c > 0) out += ",";
    out += labels[c];
  }
  out += "\n";
  for (std::size_t i = 0; i < matrix.n; ++i) {
    for (std::size_t j = 0; j < matrix.n; ++j) {
      if (j > 0) out += ",";
      out += format_double(matrix(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string render_bench_csv(const Manifest& manifest,
                             std::span<const BenchmarkRow> rows) {
  std::string out = manifest_comment_lines(manifest);
  out += "phase,workers,milliseconds,speedup\n";
  for (const BenchmarkRow& row : rows) {
    out += row.phase + "," + std::to_string(row.workers) + "," +
           format_double(row.millis) + "," + format_double(row.speedup) + "\n";
  }
  return out;
}

}  // namespace qcso
