#include "bdg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bdg/derived_series.hpp"
#include "bdg/divisor_graph.hpp"
#include "bdg/dixon.hpp"
#include "bdg/error.hpp"

namespace bdg {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& label, int line,
                       const std::string& what) {
  std::ostringstream os;
  os << label << ":" << line << ": " << what;
  throw ParseError(os.str());
}

std::vector<std::uint64_t> parse_int_list(const std::string& text,
                                          const std::string& label, int line) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      fail(label, line, "invalid integer list element '" + item + "'");
    out.push_back(std::stoull(item));
  }
  if (out.empty()) fail(label, line, "empty integer list");
  return out;
}

// Validates a shape descriptor against the corpus grammar.
void check_shape_grammar(const std::string& text, const std::string& label,
                         int line) {
  const std::size_t colon = text.find(':');
  const std::string tag = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_ints = [&](std::size_t min_count, std::size_t max_count) {
    const auto values = parse_int_list(rest, label, line);
    if (values.size() < min_count || values.size() > max_count)
      fail(label, line, "shape '" + text + "' has the wrong arity");
  };
  if (tag == "empty" || tag == "other") {
    if (colon != std::string::npos)
      fail(label, line, "shape '" + tag + "' takes no parameters");
  } else if (tag == "path" || tag == "cycle" || tag == "complete" ||
             tag == "regular" || tag == "components") {
    need_ints(1, 1);
  } else if (tag == "kmn") {
    need_ints(2, 2);
  } else if (tag == "union_paths") {
    need_ints(1, 64);
  } else {
    fail(label, line, "unknown shape tag '" + tag + "'");
  }
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in,
                                      const std::string& label) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  CorpusEntry current;
  bool open = false;
  int line_no = 0;

  auto finish = [&]() {
    if (!open) return;
    if (current.name.empty()) fail(label, current.line, "entry without name");
    if (current.source_text.empty())
      fail(label, current.line, "entry '" + current.name + "' without source");
    if (current.claimed_cd.empty())
      fail(label, current.line, "entry '" + current.name + "' without cd");
    if (current.claimed_shape.empty())
      fail(label, current.line, "entry '" + current.name + "' without shape");
    if (!names.insert(current.name).second)
      fail(label, current.line, "duplicate entry name '" + current.name + "'");
    entries.push_back(std::move(current));
    current = CorpusEntry{};
    open = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "[entry]") {
      finish();
      open = true;
      current.line = line_no;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (!open || eq == std::string::npos)
      fail(label, line_no, "expected '[entry]' or 'key = value'");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key == "name") {
      current.name = value;
    } else if (key == "source") {
      current.source_text = value;
      if (value == "recorded") {
        current.recorded_only = true;
      } else {
        try {
          current.spec = parse_group_spec(value);
        } catch (const Error& e) {
          fail(label, line_no, e.what());
        }
      }
    } else if (key == "cd") {
      current.claimed_cd = parse_int_list(value, label, line_no);
      std::sort(current.claimed_cd.begin(), current.claimed_cd.end());
      if (std::find(current.claimed_cd.begin(), current.claimed_cd.end(),
                    std::uint64_t{1}) == current.claimed_cd.end())
        fail(label, line_no, "cd must contain 1");
      if (std::adjacent_find(current.claimed_cd.begin(),
                             current.claimed_cd.end()) !=
          current.claimed_cd.end())
        fail(label, line_no, "cd contains a duplicate");
    } else if (key == "shape") {
      check_shape_grammar(value, label, line_no);
      current.claimed_shape = value;
    } else if (key == "cite") {
      current.cite = value;
    } else {
      fail(label, line_no, "unknown key '" + key + "'");
    }
  }
  finish();
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  return parse_corpus(in, path);
}

namespace {

std::string join_ints(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

}  // namespace

VerificationReport verify_corpus(const std::vector<CorpusEntry>& entries,
                                 std::uint64_t enumeration_bound) {
  VerificationReport report;
  report.all_passed = true;

  for (const CorpusEntry& entry : entries) {
    EntryResult result;
    result.name = entry.name;
    result.recomputed = !entry.recorded_only;
    result.passed = true;

    std::vector<std::uint64_t> cd = entry.claimed_cd;
    try {
      if (!entry.recorded_only) {
        Group g = realize(entry.spec, enumeration_bound);
        result.order = g.order();
        const DegreeData degrees = character_degrees(g);
        cd = degrees.cd;
        result.cd = cd;
        const DerivedSeriesReport series = derived_series(g);
        result.solvable = series.solvable;
        result.derived_length = series.derived_length;
        if (cd != entry.claimed_cd) {
          result.passed = false;
          result.detail = "cd mismatch: computed {" + join_ints(cd) +
                          "} vs claimed {" + join_ints(entry.claimed_cd) + "}";
        }
      } else {
        result.cd = cd;
      }

      std::vector<std::uint64_t> cd_star;
      for (std::uint64_t d : cd)
        if (d > 1) cd_star.push_back(d);
      const DivisorGraph b = build_graph(cd_star, GraphKind::B);
      const GraphStats stats = graph_stats(b);
      const ShapeClass shape = classify_shape(b);
      result.shape = format_shape(shape);
      result.b_diameter = stats.diameter;
      result.b_components = stats.components;

      if (entry.claimed_shape.rfind("components:", 0) == 0) {
        const std::size_t want =
            std::stoull(entry.claimed_shape.substr(11));
        if (stats.components != want) {
          result.passed = false;
          if (!result.detail.empty()) result.detail += "; ";
          result.detail += "component count mismatch: computed " +
                           std::to_string(stats.components) + " vs claimed " +
                           std::to_string(want);
        }
      } else if (result.shape != entry.claimed_shape) {
        result.passed = false;
        if (!result.detail.empty()) result.detail += "; ";
        result.detail += "shape mismatch: computed '" + result.shape +
                         "' vs claimed '" + entry.claimed_shape + "'";
      }
    } catch (const Error& e) {
      result.passed = false;
      result.detail = std::string("error: ") + e.what();
    }

    report.all_passed = report.all_passed && result.passed;
    report.entries.push_back(std::move(result));
  }
  return report;
}

}  // namespace bdg
