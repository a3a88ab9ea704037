#ifndef BDG_DIVISOR_GRAPH_HPP_
#define BDG_DIVISOR_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bdg {

enum class GraphKind { B, Delta, Gamma };

/// A vertex of a divisor graph.  In B the same integer can appear on both
/// sides (prime 3 and degree 3, say), so vertices carry their class.
struct GraphVertex {
  bool prime = false;
  std::uint64_t value = 0;

  friend auto operator<=>(const GraphVertex&, const GraphVertex&) = default;
};

struct DivisorGraph {
  GraphKind kind = GraphKind::B;
  std::vector<std::uint64_t> prime_vertices;   // sorted, empty for Gamma
  std::vector<std::uint64_t> number_vertices;  // sorted, empty for Delta
  std::vector<std::pair<GraphVertex, GraphVertex>> edges;  // canonical order

  std::size_t vertex_count() const {
    return prime_vertices.size() + number_vertices.size();
  }
};

/// Builds B/Delta/Gamma for a set of integers > 1 (deduplicated internally).
/// Throws InvalidArgument if any element is < 2; the empty set gives the
/// empty graph.
DivisorGraph build_graph(const std::vector<std::uint64_t>& x, GraphKind kind);

struct GraphStats {
  std::size_t components = 0;
  std::size_t diameter = 0;  // max eccentricity over components; 0 when empty
  std::vector<std::size_t> component_sizes;   // vertex counts, descending
  std::vector<std::size_t> degree_sequence;   // descending
  std::optional<std::size_t> regular;         // k when k-regular
};

GraphStats graph_stats(const DivisorGraph& g);

struct ShapeClass {
  enum class Tag {
    Empty,
    Path,
    Cycle,
    CompleteBipartite,
    Complete,
    UnionOfPaths,
    Regular,
    Other,
  };

  Tag tag = Tag::Empty;
  std::size_t length = 0;                  // edges, for Path and Cycle
  std::size_t part_m = 0, part_n = 0;      // CompleteBipartite
  std::size_t order = 0;                   // Complete: vertices; Regular: k
  std::vector<std::size_t> path_lengths;   // UnionOfPaths, edges, descending

  std::size_t components = 0;
  std::size_t diameter = 0;
  std::size_t vertices = 0;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

/// Assigns exactly one tag by the priority
/// Empty > Cycle > Path > CompleteBipartite > Complete > UnionOfPaths >
/// Regular > Other.  Lengths count edges.
ShapeClass classify_shape(const DivisorGraph& g);

/// True when the graph is connected and equals K_{m,n} for some bipartition;
/// reports the part sizes with m the first part found (prime side for B).
bool is_complete_bipartite(const DivisorGraph& g, std::size_t* m,
                           std::size_t* n);

std::string shape_name(ShapeClass::Tag tag);
/// Compact text form, e.g. "path:4", "kmn:2,3", "union_paths:3,1".
std::string format_shape(const ShapeClass& shape);

/// Deterministic DOT output; prime vertices are light circles, number
/// vertices dark boxes.
std::string to_dot(const DivisorGraph& g);

}  // namespace bdg

#endif  // BDG_DIVISOR_GRAPH_HPP_
