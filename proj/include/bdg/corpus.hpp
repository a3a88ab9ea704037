#ifndef BDG_CORPUS_HPP_
#define BDG_CORPUS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bdg/group_spec.hpp"

namespace bdg {

/// One machine-readable claim: a group (constructor expression or
/// recorded-only degree set), its degree set, and the expected shape of B.
struct CorpusEntry {
  std::string name;
  bool recorded_only = false;
  std::string source_text;            // original source field
  GroupSpec spec;                     // valid when !recorded_only
  std::vector<std::uint64_t> claimed_cd;  // sorted, contains 1
  std::string claimed_shape;          // shape grammar, e.g. "path:4"
  std::string cite;
  int line = 0;
};

/// Parses the [entry]-block corpus format; errors carry line numbers.
std::vector<CorpusEntry> parse_corpus(std::istream& in,
                                      const std::string& label);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct EntryResult {
  std::string name;
  bool recomputed = false;  // false for recorded-only entries
  bool passed = false;
  std::string detail;       // human-readable mismatch description

  // Data for downstream bound checks; group fields valid when recomputed.
  std::vector<std::uint64_t> cd;  // computed (or claimed, for recorded-only)
  std::string shape;              // computed shape of B
  std::size_t b_diameter = 0;
  std::size_t b_components = 0;
  std::uint64_t order = 0;
  bool solvable = false;
  std::size_t derived_length = 0;
};

struct VerificationReport {
  std::vector<EntryResult> entries;
  bool all_passed = false;
};

VerificationReport verify_corpus(
    const std::vector<CorpusEntry>& entries,
    std::uint64_t enumeration_bound = kDefaultEnumerationBound);

}  // namespace bdg

#endif  // BDG_CORPUS_HPP_
