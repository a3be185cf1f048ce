#pragma once

// Hereditary saturated sets, quotient graphs and the maximal cycle/sink
// correspondences with order-ideals of the talented monoid.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gqw/graph.hpp"
#include "gqw/talented.hpp"

namespace gqw {

bool is_hereditary(const Graph& g, const VertexSet& s);
bool is_saturated(const Graph& g, const VertexSet& s);

/// A hereditary saturated vertex set of a fixed graph.
class HSatSet {
 public:
  // Throws PreconditionError unless `s` is hereditary and saturated in g.
  static HSatSet make(const Graph& g, VertexSet s);

  const VertexSet& vertices() const noexcept { return vertices_; }
  bool contains(Vertex v) const { return vertices_.count(v) > 0; }
  std::size_t size() const noexcept { return vertices_.size(); }

  friend bool operator==(const HSatSet&, const HSatSet&) = default;
  friend auto operator<=>(const HSatSet& a, const HSatSet& b) { return a.vertices_ <=> b.vertices_; }

 private:
  friend HSatSet saturate(const Graph&, const VertexSet&);
  VertexSet vertices_;
};

// Least hereditary saturated set containing s.
HSatSet saturate(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kDefaultHSatVertexCap = 20;

struct HSatLattice {
  // Sorted by size, then lexicographically.
  std::vector<HSatSet> members;
  // Hasse diagram: (i, j) when members[i] is covered by members[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Throws CapExceededError when g has more than `vertex_cap` vertices.
HSatLattice enumerate_hsat(const Graph& g, std::size_t vertex_cap = kDefaultHSatVertexCap);

// E/H: delete H and every edge touching it.
Graph quotient_graph(const Graph& g, const HSatSet& h);
// Repeatedly deletes sources that are not isolated.
Graph remove_sources(const Graph& g);

struct CometOfPeriod {
  std::size_t period = 1;
  friend bool operator==(const CometOfPeriod&, const CometOfPeriod&) = default;
};
struct AcyclicUniqueSink {
  friend bool operator==(const AcyclicUniqueSink&, const AcyclicUniqueSink&) = default;
};
struct OtherQuotient {
  friend bool operator==(const OtherQuotient&, const OtherQuotient&) = default;
};
using QuotientKind = std::variant<CometOfPeriod, AcyclicUniqueSink, OtherQuotient>;

std::string to_string(const QuotientKind& k);

QuotientKind classify_graph(const Graph& g);
QuotientKind classify_quotient(const Graph& g, const HSatSet& h);

struct CycleIdeal {
  CycleClass cycle;
  HSatSet ideal;
  std::size_t period = 0;
};
struct SinkIdeal {
  Vertex sink = 0;
  HSatSet ideal;
};
struct TalMax {
  std::vector<CycleIdeal> cycles;
  std::vector<SinkIdeal> sinks;
};

// H = {v : T(v) misses C0} for each maximal cycle C and
// H = {v : z not in T(v)} for each maximal sink z.
TalMax talmax(const Graph& g);

struct Signature {
  std::vector<std::size_t> cycle_lengths;  // sorted ascending
  std::size_t maximal_sinks = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Graph& g);
std::string to_string(const Signature& s);

struct Matching {
  // Indices into maximal_cycles(g1) / maximal_cycles(g2).
  std::vector<std::pair<std::size_t, std::size_t>> cycles;
  // Vertices of g1 / g2.
  std::vector<std::pair<Vertex, Vertex>> sinks;
};

struct Incompatibility {
  std::string component;  // "cycles" or "sinks"
  std::string left;
  std::string right;
};

using CandidateResult = std::variant<Matching, Incompatibility>;

// Necessary condition for a Z-isomorphism of talented monoids. Cycles are
// paired in order of (length, canonical form), sinks in declaration order.
CandidateResult candidate_check(const Graph& g1, const Graph& g2);

bool ideal_membership(const TalentedElement& x, const HSatSet& h);

}  // namespace gqw
