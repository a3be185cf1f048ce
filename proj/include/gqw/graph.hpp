#pragma once

// Finite directed multigraphs and their path/cycle combinatorics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gqw {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;
using VertexSet = std::set<Vertex>;

struct Edge {
  std::string id;
  Vertex source = 0;
  Vertex range = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge declaration by vertex name, as written in a graph document.
struct EdgeSpec {
  std::string id;
  std::string source;
  std::string range;
};

/// A finite directed multigraph E = (E0, E1, r, s).
///
/// Vertices and edges keep their declaration order; that order is the
/// tie-breaker for every canonical form produced by this library. Parallel
/// edges and several loops at one vertex are allowed. Instances are immutable.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges);
  Graph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::string& name() const noexcept { return name_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const std::string& vertex_name(Vertex v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<Vertex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  // Throws PreconditionError("unknown vertex ...").
  Vertex vertex(std::string_view name) const;

  std::span<const EdgeIndex> out_edges(Vertex v) const { return out_.at(v); }
  std::span<const EdgeIndex> in_edges(Vertex v) const { return in_.at(v); }

  bool is_sink(Vertex v) const { return out_.at(v).empty(); }
  bool is_source(Vertex v) const { return in_.at(v).empty(); }
  bool is_isolated(Vertex v) const { return is_sink(v) && is_source(v); }
  bool is_regular(Vertex v) const { return !is_sink(v); }

  // True when every source of the graph is an isolated vertex.
  bool sources_are_isolated() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void index();

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::unordered_map<std::string, EdgeIndex> edge_index_;
};

/// A nonempty path e1 e2 ... en with r(ei) = s(ei+1).
class Path {
 public:
  // Throws PreconditionError if the sequence is empty or not composable.
  static Path make(const Graph& g, std::vector<EdgeIndex> edges);

  const std::vector<EdgeIndex>& edges() const noexcept { return edges_; }
  Vertex source() const noexcept { return source_; }
  Vertex range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  VertexSet vertices(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<EdgeIndex> edges_;
  Vertex source_ = 0;
  Vertex range_ = 0;
};

/// A cycle up to rotation. `edges` is the lexicographically least rotation
/// under the declared edge order; `vertices[i]` is the source of `edges[i]`.
struct CycleClass {
  std::vector<EdgeIndex> edges;
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return edges.size(); }
  VertexSet vertex_set() const { return {vertices.begin(), vertices.end()}; }
  // Edge ids joined with '.', e.g. "e1.e2".
  std::string id(const Graph& g) const;

  friend bool operator==(const CycleClass& a, const CycleClass& b) { return a.edges == b.edges; }
  friend auto operator<=>(const CycleClass& a, const CycleClass& b) { return a.edges <=> b.edges; }
};

struct VertexClasses {
  std::vector<Vertex> sinks;
  std::vector<Vertex> sources;
  std::vector<Vertex> isolated;
  std::vector<Vertex> regular;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;
inline constexpr std::size_t kDefaultCspCap = 100'000;

VertexClasses vertex_classes(const Graph& g);

// Forward reachability including the seeds themselves.
VertexSet tree(const Graph& g, const VertexSet& seeds);
VertexSet tree(const Graph& g, Vertex v);

// Canonicalizes a closed path whose edge sources are pairwise distinct.
CycleClass canonical_cycle(const Graph& g, std::vector<EdgeIndex> closed_path);

// All cycles up to rotation, sorted by canonical edge sequence.
// Throws CapExceededError when more than `cap` classes exist.
std::vector<CycleClass> enumerate_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

bool is_acyclic(const Graph& g);

// Tarjan components, each sorted; components listed in order of their
// smallest vertex.
std::vector<std::vector<Vertex>> strongly_connected_components(const Graph& g);

// Cycles that no other cycle connects to, sorted canonically.
std::vector<CycleClass> maximal_cycles(const Graph& g);
// Sinks that no cycle connects to, in declaration order.
std::vector<Vertex> maximal_sinks(const Graph& g);
// C(E): the union of the vertex sets of maximal cycles.
VertexSet maximal_cycle_vertices(const Graph& g);

// Number of simple closed paths based at v, or nullopt when infinite.
// Saturates at UINT64_MAX.
std::optional<std::uint64_t> csp_size(const Graph& g, Vertex v);
// The simple closed paths based at v, shortest first.
// Throws CapExceededError when the set is infinite or larger than `cap`.
std::vector<Path> csp(const Graph& g, Vertex v, std::size_t cap = kDefaultCspCap);
// {v : |CSP(v)| > 1}
VertexSet csp_gt1(const Graph& g);

// Walks backwards from v along first in-edges until a vertex repeats and
// returns the cycle found. Requires a graph without sources.
CycleClass find_cycle_reaching(const Graph& g, Vertex v);

std::string format_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace gqw
