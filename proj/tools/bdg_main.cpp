// Command-line front end: degree computation, graph emission, shape
// classification, and corpus verification.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdg/corpus.hpp"
#include "bdg/derived_series.hpp"
#include "bdg/divisor_graph.hpp"
#include "bdg/dixon.hpp"
#include "bdg/error.hpp"
#include "bdg/group_spec.hpp"

namespace {

using nlohmann::json;

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("BDG_ENUMERATION_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw bdg::InvalidArgument("BDG_ENUMERATION_BOUND must be a positive integer");
  }
  return bdg::kDefaultEnumerationBound;
}

std::vector<std::uint64_t> parse_set(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw bdg::InvalidArgument("--set expects comma-separated integers");
    out.push_back(std::stoull(item));
    pos = next + 1;
  }
  if (out.empty()) throw bdg::InvalidArgument("--set is empty");
  return out;
}

bdg::GraphKind parse_kind(const std::string& kind) {
  if (kind == "B") return bdg::GraphKind::B;
  if (kind == "Delta") return bdg::GraphKind::Delta;
  if (kind == "Gamma") return bdg::GraphKind::Gamma;
  throw bdg::InvalidArgument("--kind must be B, Delta, or Gamma");
}

json shape_json(const bdg::ShapeClass& shape) {
  json out;
  out["tag"] = bdg::shape_name(shape.tag);
  out["shape"] = bdg::format_shape(shape);
  out["components"] = shape.components;
  out["diameter"] = shape.diameter;
  out["vertices"] = shape.vertices;
  return out;
}

json graph_json(const bdg::DivisorGraph& g) {
  json out;
  switch (g.kind) {
    case bdg::GraphKind::B: out["kind"] = "B"; break;
    case bdg::GraphKind::Delta: out["kind"] = "Delta"; break;
    case bdg::GraphKind::Gamma: out["kind"] = "Gamma"; break;
  }
  out["prime_vertices"] = g.prime_vertices;
  out["number_vertices"] = g.number_vertices;
  json edges = json::array();
  for (const auto& [a, b] : g.edges) {
    json e;
    e.push_back(std::string(a.prime ? "p" : "n") + std::to_string(a.value));
    e.push_back(std::string(b.prime ? "p" : "n") + std::to_string(b.value));
    edges.push_back(e);
  }
  out["edges"] = edges;
  return out;
}

void emit(const std::string& command, const std::string& input,
          const std::string& status, const json& result) {
  json envelope;
  envelope["command"] = command;
  envelope["input"] = input;
  envelope["status"] = status;
  envelope["result"] = result;
  std::cout << envelope.dump(2) << "\n";
}

// Degree set of a spec-or-set input; also reports the normalized input echo.
std::vector<std::uint64_t> input_degrees(const std::string& set_text,
                                         const std::string& spec_text,
                                         std::string* echo) {
  if (!set_text.empty() && !spec_text.empty())
    throw bdg::InvalidArgument("give either --set or a group spec, not both");
  if (!set_text.empty()) {
    auto values = parse_set(set_text);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    *echo = "set:";
    for (std::size_t i = 0; i < values.size(); ++i)
      *echo += (i ? "," : "") + std::to_string(values[i]);
    return values;
  }
  if (spec_text.empty())
    throw bdg::InvalidArgument("an input is required: --set or a group spec");
  const bdg::GroupSpec spec = bdg::parse_group_spec(spec_text);
  *echo = bdg::format_group_spec(spec);
  bdg::Group group = bdg::realize(spec, enumeration_bound());
  auto degrees = bdg::character_degrees(group);
  std::vector<std::uint64_t> cd_star = degrees.cd_star;
  return cd_star;
}

int cmd_degrees(const std::string& spec_text) {
  const bdg::GroupSpec spec = bdg::parse_group_spec(spec_text);
  const std::string echo = bdg::format_group_spec(spec);
  bdg::Group group = bdg::realize(spec, enumeration_bound());
  const bdg::DegreeData degrees = bdg::character_degrees(group);
  const bdg::DerivedSeriesReport series = bdg::derived_series(group);

  json result;
  result["order"] = degrees.order;
  result["class_count"] = degrees.classes;
  result["degrees"] = degrees.degrees;
  result["cd"] = degrees.cd;
  result["cd_star"] = degrees.cd_star;
  result["rho"] = degrees.rho;
  result["solvable"] = series.solvable;
  if (series.solvable) result["derived_length"] = series.derived_length;
  emit("degrees", echo, "info", result);
  return 0;
}

int cmd_graph(const std::string& set_text, const std::string& spec_text,
              const std::string& kind_text, const std::string& format) {
  std::string echo;
  const auto values = input_degrees(set_text, spec_text, &echo);
  const bdg::DivisorGraph g = bdg::build_graph(values, parse_kind(kind_text));
  if (format == "dot") {
    std::cout << bdg::to_dot(g);
    return 0;
  }
  if (format == "json") {
    emit("graph", echo, "info", graph_json(g));
    return 0;
  }
  if (format == "text") {
    for (const auto& [a, b] : g.edges)
      std::cout << (a.prime ? "p" : "n") << a.value << " -- "
                << (b.prime ? "p" : "n") << b.value << "\n";
    return 0;
  }
  throw bdg::InvalidArgument("--format must be dot, json, or text");
}

int cmd_classify(const std::string& set_text, const std::string& spec_text,
                 const std::string& kind_text) {
  std::string echo;
  const auto values = input_degrees(set_text, spec_text, &echo);
  const bdg::DivisorGraph g = bdg::build_graph(values, parse_kind(kind_text));
  emit("classify", echo, "info", shape_json(bdg::classify_shape(g)));
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& report_path) {
  std::vector<bdg::CorpusEntry> entries;
  try {
    entries = bdg::load_corpus(corpus_path);
  } catch (const bdg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const bdg::VerificationReport report =
      bdg::verify_corpus(entries, enumeration_bound());

  for (const bdg::EntryResult& r : report.entries) {
    std::printf("%-28s %-10s %s", r.name.c_str(),
                r.recomputed ? "computed" : "recorded",
                r.passed ? "PASS" : "FAIL");
    if (!r.passed) std::printf("  %s", r.detail.c_str());
    std::printf("\n");
  }
  std::printf("%zu/%zu entries passed\n",
              static_cast<std::size_t>(
                  std::count_if(report.entries.begin(), report.entries.end(),
                                [](const auto& r) { return r.passed; })),
              report.entries.size());

  if (!report_path.empty()) {
    json entries_json = json::array();
    for (const bdg::EntryResult& r : report.entries) {
      json e;
      e["name"] = r.name;
      e["recomputed"] = r.recomputed;
      e["passed"] = r.passed;
      if (!r.detail.empty()) e["detail"] = r.detail;
      e["cd"] = r.cd;
      e["shape"] = r.shape;
      e["b_components"] = r.b_components;
      e["b_diameter"] = r.b_diameter;
      if (r.recomputed) {
        e["order"] = r.order;
        e["solvable"] = r.solvable;
        if (r.solvable) e["derived_length"] = r.derived_length;
      }
      entries_json.push_back(e);
    }
    json out;
    out["command"] = "verify";
    out["input"] = corpus_path;
    out["status"] = report.all_passed ? "pass" : "fail";
    out["result"]["entries"] = entries_json;
    std::ofstream file(report_path);
    if (!file) {
      std::cerr << "error: cannot write report file: " << report_path << "\n";
      return 2;
    }
    file << out.dump(2) << "\n";
  }
  return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character-degree divisor graph toolkit"};
  app.require_subcommand(1);

  std::string spec_text, set_text, kind_text = "B", format = "json";
  std::string corpus_path, report_path;

  CLI::App* degrees = app.add_subcommand("degrees", "character degrees of a group");
  degrees->add_option("spec", spec_text, "group constructor expression")
      ->required();

  CLI::App* graph = app.add_subcommand("graph", "emit B/Delta/Gamma");
  graph->add_option("expression", spec_text, "group constructor expression");
  graph->add_option("--spec", spec_text, "group constructor expression");
  graph->add_option("--set", set_text, "explicit degree set, comma separated");
  graph->add_option("--kind", kind_text, "B, Delta, or Gamma");
  graph->add_option("--format", format, "dot, json, or text");

  CLI::App* classify = app.add_subcommand("classify", "classify a graph shape");
  classify->add_option("expression", spec_text, "group constructor expression");
  classify->add_option("--spec", spec_text, "group constructor expression");
  classify->add_option("--set", set_text, "explicit degree set, comma separated");
  classify->add_option("--kind", kind_text, "B, Delta, or Gamma");

  CLI::App* verify = app.add_subcommand("verify", "verify a claims corpus");
  verify->add_option("path", corpus_path, "corpus file path");
  verify->add_option("--corpus", corpus_path, "corpus file path");
  verify->add_option("--report", report_path, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (degrees->parsed()) return cmd_degrees(spec_text);
    if (graph->parsed()) return cmd_graph(set_text, spec_text, kind_text, format);
    if (classify->parsed()) return cmd_classify(set_text, spec_text, kind_text);
    if (verify->parsed()) {
      if (corpus_path.empty())
        throw bdg::InvalidArgument("verify needs a corpus path");
      return cmd_verify(corpus_path, report_path);
    }
  } catch (const bdg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
