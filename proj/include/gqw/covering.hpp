#pragma once

// Double graph, Cuntz-Krieger relations and finite windows of the covering
// graph.

#include <cstdint>
#include <string>
#include <vector>

#include "gqw/graph.hpp"

namespace gqw {

using Level = std::int64_t;

struct DoubleEdge {
  std::string id;  // "e" or "e*"
  Vertex source = 0;
  Vertex range = 0;
  int weight = 1;  // +1 real, -1 ghost
  EdgeIndex base = 0;

  bool ghost() const noexcept { return weight < 0; }
  friend bool operator==(const DoubleEdge&, const DoubleEdge&) = default;
};

/// E-hat. Indices 0..n-1 are the real edges in declaration order and
/// n..2n-1 their ghosts in the same order.
class DoubleGraph {
 public:
  explicit DoubleGraph(Graph g);

  const Graph& base() const noexcept { return base_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<DoubleEdge>& edges() const noexcept { return edges_; }
  const DoubleEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  EdgeIndex real(EdgeIndex base_edge) const noexcept { return base_edge; }
  EdgeIndex ghost(EdgeIndex base_edge) const noexcept { return base_.num_edges() + base_edge; }
  // Accepts "e" and "e*".
  EdgeIndex find(const std::string& id) const;

  friend bool operator==(const DoubleGraph& a, const DoubleGraph& b) { return a.base_ == b.base_; }

 private:
  Graph base_;
  std::vector<DoubleEdge> edges_;
};

DoubleGraph double_graph(const Graph& g);

// One summand coef * p. An empty `edges` list is the trivial path at `start`.
struct PathTerm {
  std::int64_t coef = 1;
  Vertex start = 0;
  std::vector<EdgeIndex> edges;  // double-graph indices

  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

// Sum of terms = 0, all terms running from `source` to `range`.
struct Relation {
  std::string id;
  Vertex source = 0;
  Vertex range = 0;
  std::vector<PathTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class RelationKind { Pair, Sum };

struct CKRelationSet {
  std::vector<Relation> relations;
  std::vector<RelationKind> kinds;

  std::size_t size() const noexcept { return relations.size(); }
};

// Per vertex in declaration order: e*f = delta r(e) for every ordered pair of
// edges out of v, then sum e e* = v if v is regular.
CKRelationSet ck_relations(const DoubleGraph& dg);

std::string relation_to_string(const DoubleGraph& dg, const Relation& r);

struct LevelVertex {
  Vertex vertex = 0;
  Level level = 0;

  friend bool operator==(const LevelVertex&, const LevelVertex&) = default;
  friend auto operator<=>(const LevelVertex&, const LevelVertex&) = default;
};

// The lift of double-graph edge `edge` carrying label `label`. A real edge
// e_i runs s(e)@(i-1) -> r(e)@i, a ghost e*_i runs r(e)@i -> s(e)@(i-1).
struct WindowEdge {
  EdgeIndex edge = 0;
  Level label = 0;
  LevelVertex source;
  LevelVertex range;

  friend bool operator==(const WindowEdge&, const WindowEdge&) = default;
};

WindowEdge lift_edge(const DoubleGraph& dg, EdgeIndex edge, Level from);

class CoveringWindow {
 public:
  // Throws PreconditionError if lo > hi.
  CoveringWindow(const DoubleGraph& dg, Level lo, Level hi);

  Level lo() const noexcept { return lo_; }
  Level hi() const noexcept { return hi_; }
  bool contains(Level l) const noexcept { return lo_ <= l && l <= hi_; }
  // Level-major, then base vertex order.
  const std::vector<LevelVertex>& vertices() const noexcept { return vertices_; }
  // Ordered by label, then double-graph edge index.
  const std::vector<WindowEdge>& edges() const noexcept { return edges_; }

  friend bool operator==(const CoveringWindow&, const CoveringWindow&) = default;

 private:
  CoveringWindow() = default;
  friend CoveringWindow shift_window(const CoveringWindow& w, Level k);

  Level lo_ = 0;
  Level hi_ = 0;
  std::vector<LevelVertex> vertices_;
  std::vector<WindowEdge> edges_;
};

CoveringWindow covering_window(const DoubleGraph& dg, Level lo, Level hi);

struct LiftedPath {
  LevelVertex start;
  std::vector<WindowEdge> edges;

  LevelVertex end() const { return edges.empty() ? start : edges.back().range; }
  friend bool operator==(const LiftedPath&, const LiftedPath&) = default;
};

// Lifts a double-graph path starting at level j. The final level is j plus
// the sum of edge weights. Throws PreconditionError if not composable.
LiftedPath lift_path(const DoubleGraph& dg, const std::vector<EdgeIndex>& path, Level j);
LiftedPath lift_trivial(Vertex v, Level j);

struct LiftedTerm {
  std::int64_t coef = 1;
  LiftedPath path;
  friend bool operator==(const LiftedTerm&, const LiftedTerm&) = default;
};

struct LiftedRelation {
  std::size_t relation = 0;  // index into the CKRelationSet
  Level level = 0;           // start level of every term
  std::vector<LiftedTerm> terms;
  friend bool operator==(const LiftedRelation&, const LiftedRelation&) = default;
};

struct BoundaryDrop {
  std::size_t relation = 0;
  Level level = 0;
};

struct LiftedRelations {
  std::vector<LiftedRelation> relations;
  std::vector<BoundaryDrop> dropped;
};

// Lifts every relation at every start level in [lo, hi]; lifts that leave the
// window are listed in `dropped`.
LiftedRelations lift_relations(const DoubleGraph& dg, const CKRelationSet& rel, Level lo, Level hi);

std::string lifted_relation_to_string(const DoubleGraph& dg, const LiftedRelation& r);

// Relabels level i as i - k.
CoveringWindow shift_window(const CoveringWindow& w, Level k);

std::string to_dot(const DoubleGraph& dg);
std::string to_dot(const DoubleGraph& dg, const CoveringWindow& w);

}  // namespace gqw
