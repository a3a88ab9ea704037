#include "bdg/divisor_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "bdg/arith.hpp"
#include "bdg/error.hpp"

namespace bdg {

namespace {

std::vector<std::uint64_t> dedup_sorted(std::vector<std::uint64_t> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

// Adjacency lists over a dense vertex indexing in GraphVertex order
// (number vertices sort before prime vertices).
struct Indexed {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<std::size_t>> adj;
};

Indexed index_graph(const DivisorGraph& g) {
  Indexed ix;
  for (std::uint64_t m : g.number_vertices) ix.vertices.push_back({false, m});
  for (std::uint64_t p : g.prime_vertices) ix.vertices.push_back({true, p});
  ix.adj.resize(ix.vertices.size());
  auto locate = [&](const GraphVertex& v) -> std::size_t {
    auto it = std::lower_bound(ix.vertices.begin(), ix.vertices.end(), v);
    return static_cast<std::size_t>(it - ix.vertices.begin());
  };
  for (const auto& [a, b] : g.edges) {
    const std::size_t ia = locate(a), ib = locate(b);
    ix.adj[ia].push_back(ib);
    ix.adj[ib].push_back(ia);
  }
  return ix;
}

}  // namespace

DivisorGraph build_graph(const std::vector<std::uint64_t>& x, GraphKind kind) {
  for (std::uint64_t v : x)
    if (v < 2)
      throw InvalidArgument("build_graph: set elements must be at least 2");
  const std::vector<std::uint64_t> numbers = dedup_sorted(x);

  std::vector<std::uint64_t> primes;
  std::map<std::uint64_t, std::vector<std::uint64_t>> prime_factors;
  for (std::uint64_t m : numbers)
    for (const auto& [p, e] : factorize(m)) {
      primes.push_back(p);
      prime_factors[m].push_back(p);
    }
  primes = dedup_sorted(std::move(primes));

  DivisorGraph g;
  g.kind = kind;
  switch (kind) {
    case GraphKind::B:
      g.prime_vertices = primes;
      g.number_vertices = numbers;
      for (std::uint64_t p : primes)
        for (std::uint64_t m : numbers)
          if (m % p == 0) g.edges.push_back({{true, p}, {false, m}});
      break;
    case GraphKind::Delta:
      g.prime_vertices = primes;
      for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
          const std::uint64_t pq = primes[i] * primes[j];
          if (std::any_of(numbers.begin(), numbers.end(),
                          [pq](std::uint64_t m) { return m % pq == 0; }))
            g.edges.push_back({{true, primes[i]}, {true, primes[j]}});
        }
      break;
    case GraphKind::Gamma:
      g.number_vertices = numbers;
      for (std::size_t i = 0; i < numbers.size(); ++i)
        for (std::size_t j = i + 1; j < numbers.size(); ++j)
          if (std::gcd(numbers[i], numbers[j]) != 1)
            g.edges.push_back({{false, numbers[i]}, {false, numbers[j]}});
      break;
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphStats graph_stats(const DivisorGraph& g) {
  const Indexed ix = index_graph(g);
  const std::size_t n = ix.vertices.size();
  GraphStats stats;

  std::vector<int> component(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int c = static_cast<int>(stats.components++);
    std::size_t count = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    component[start] = c;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      ++count;
      for (std::size_t w : ix.adj[v])
        if (component[w] < 0) {
          component[w] = c;
          queue.push(w);
        }
    }
    stats.component_sizes.push_back(count);
  }
  std::sort(stats.component_sizes.rbegin(), stats.component_sizes.rend());

  // Diameter: max eccentricity, per component, by BFS from every vertex.
  std::size_t diameter = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(dist.begin(), dist.end(), static_cast<std::size_t>(-1));
    dist[start] = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      diameter = std::max(diameter, dist[v]);
      for (std::size_t w : ix.adj[v])
        if (dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
    }
  }
  stats.diameter = diameter;

  for (std::size_t v = 0; v < n; ++v)
    stats.degree_sequence.push_back(ix.adj[v].size());
  std::sort(stats.degree_sequence.rbegin(), stats.degree_sequence.rend());
  if (n > 0 && stats.degree_sequence.front() == stats.degree_sequence.back())
    stats.regular = stats.degree_sequence.front();
  return stats;
}

bool is_complete_bipartite(const DivisorGraph& g, std::size_t* m,
                           std::size_t* n) {
  const Indexed ix = index_graph(g);
  const std::size_t count = ix.vertices.size();
  if (count < 2) return false;

  // 2-color; must be connected and properly colorable.
  std::vector<int> color(count, -1);
  std::queue<std::size_t> queue;
  color[0] = 0;
  queue.push(0);
  std::size_t seen = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w : ix.adj[v]) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        ++seen;
        queue.push(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  if (seen != count) return false;
  const std::size_t part0 =
      static_cast<std::size_t>(std::count(color.begin(), color.end(), 0));
  const std::size_t part1 = count - part0;
  if (g.edges.size() != part0 * part1) return false;
  // In a connected bipartite divisor graph the color classes are exactly the
  // prime and number sides; report the prime side first.
  if (!g.prime_vertices.empty() && !g.number_vertices.empty()) {
    if (m) *m = g.prime_vertices.size();
    if (n) *n = g.number_vertices.size();
  } else {
    if (m) *m = part0;
    if (n) *n = part1;
  }
  return true;
}

ShapeClass classify_shape(const DivisorGraph& g) {
  const Indexed ix = index_graph(g);
  const GraphStats stats = graph_stats(g);
  const std::size_t n = ix.vertices.size();
  const std::size_t e = g.edges.size();

  ShapeClass shape;
  shape.components = stats.components;
  shape.diameter = stats.diameter;
  shape.vertices = n;

  if (n == 0) {
    shape.tag = ShapeClass::Tag::Empty;
    return shape;
  }
  const bool max_deg_2 =
      stats.degree_sequence.empty() || stats.degree_sequence.front() <= 2;

  if (stats.components == 1 && n >= 3 && stats.regular == 2) {
    shape.tag = ShapeClass::Tag::Cycle;
    shape.length = e;
    return shape;
  }
  if (stats.components == 1 && max_deg_2 && e + 1 == n) {
    shape.tag = ShapeClass::Tag::Path;
    shape.length = e;
    return shape;
  }
  std::size_t pm = 0, pn = 0;
  if (is_complete_bipartite(g, &pm, &pn)) {
    shape.tag = ShapeClass::Tag::CompleteBipartite;
    // Report the prime side first for B graphs, else smaller part first.
    if (g.kind == GraphKind::B) {
      shape.part_m = g.prime_vertices.size();
      shape.part_n = g.number_vertices.size();
    } else {
      shape.part_m = std::min(pm, pn);
      shape.part_n = std::max(pm, pn);
    }
    return shape;
  }
  if (stats.components == 1 && e == n * (n - 1) / 2 &&
      (stats.regular && *stats.regular == n - 1)) {
    shape.tag = ShapeClass::Tag::Complete;
    shape.order = n;
    return shape;
  }
  if (max_deg_2) {
    // Union of paths: no component may be a cycle.
    std::size_t path_components = 0;
    std::vector<std::size_t> lengths;
    // Component-wise edge counts: a tree component has size-1 edges.
    // With max degree 2 each component is a path or a cycle; a path
    // component of k vertices has k-1 edges.  Total edges tell them apart.
    std::size_t expected_path_edges = 0;
    for (std::size_t c : stats.component_sizes) {
      expected_path_edges += c - 1;
      lengths.push_back(c - 1);
      ++path_components;
    }
    if (expected_path_edges == e) {
      std::sort(lengths.rbegin(), lengths.rend());
      shape.tag = ShapeClass::Tag::UnionOfPaths;
      shape.path_lengths = std::move(lengths);
      return shape;
    }
  }
  if (stats.regular) {
    shape.tag = ShapeClass::Tag::Regular;
    shape.order = *stats.regular;
    return shape;
  }
  shape.tag = ShapeClass::Tag::Other;
  return shape;
}

std::string shape_name(ShapeClass::Tag tag) {
  switch (tag) {
    case ShapeClass::Tag::Empty: return "empty";
    case ShapeClass::Tag::Path: return "path";
    case ShapeClass::Tag::Cycle: return "cycle";
    case ShapeClass::Tag::CompleteBipartite: return "kmn";
    case ShapeClass::Tag::Complete: return "complete";
    case ShapeClass::Tag::UnionOfPaths: return "union_paths";
    case ShapeClass::Tag::Regular: return "regular";
    case ShapeClass::Tag::Other: return "other";
  }
  return "other";
}

std::string format_shape(const ShapeClass& shape) {
  std::ostringstream os;
  os << shape_name(shape.tag);
  switch (shape.tag) {
    case ShapeClass::Tag::Path:
    case ShapeClass::Tag::Cycle:
      os << ":" << shape.length;
      break;
    case ShapeClass::Tag::CompleteBipartite:
      os << ":" << shape.part_m << "," << shape.part_n;
      break;
    case ShapeClass::Tag::Complete:
    case ShapeClass::Tag::Regular:
      os << ":" << shape.order;
      break;
    case ShapeClass::Tag::UnionOfPaths:
      os << ":";
      for (std::size_t i = 0; i < shape.path_lengths.size(); ++i) {
        if (i) os << ",";
        os << shape.path_lengths[i];
      }
      break;
    default:
      break;
  }
  return os.str();
}

std::string to_dot(const DivisorGraph& g) {
  std::ostringstream os;
  os << "graph divisor_graph {\n";
  os << "  node [style=filled];\n";
  for (std::uint64_t p : g.prime_vertices)
    os << "  \"p" << p << "\" [label=\"" << p
       << "\", shape=circle, fillcolor=\"#e8e8e8\"];\n";
  for (std::uint64_t m : g.number_vertices)
    os << "  \"n" << m << "\" [label=\"" << m
       << "\", shape=box, fillcolor=\"#555555\", fontcolor=white];\n";
  for (const auto& [a, b] : g.edges)
    os << "  \"" << (a.prime ? 'p' : 'n') << a.value << "\" -- \""
       << (b.prime ? 'p' : 'n') << b.value << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bdg
