#pragma once

// Dimension functions of graded representations on the covering graph:
// flow equation, stabilization data and the correspondence with datum
// collections ((phi_v), (tau_w), (k_1..k_n)_C).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gqw/graph.hpp"
#include "gqw/level_map.hpp"

namespace gqw {

/// phi_v per isolated vertex, tau_w per non-isolated sink, a tuple per
/// maximal cycle. Tuple entry m belongs to the m-th vertex of the cycle's
/// canonical rotation at level `threshold`. Without an explicit threshold the
/// canonical one is used (see canonical_threshold).
struct RepDatum {
  std::map<Vertex, LevelMap> isolated;
  std::map<Vertex, LevelMap> sinks;
  std::map<CycleClass, std::vector<std::uint64_t>> cycles;
  std::optional<Level> threshold;

  friend bool operator==(const RepDatum&, const RepDatum&) = default;
};

// Throws PreconditionError on a malformed datum: wrong vertex kinds, tuple
// lengths, sink maps that never vanish, or a threshold below a sink's.
void validate_datum(const Graph& g, const RepDatum& datum);

// Max of the least vanishing thresholds of the nonzero sink maps; 0 if none.
Level canonical_threshold(const Graph& g, const RepDatum& datum);
Level effective_threshold(const Graph& g, const RepDatum& datum);

// Fills absent entries with zero data and re-expresses tuples at the
// canonical threshold.
RepDatum normalize(const Graph& g, const RepDatum& datum);
// The same datum with tuples expressed at threshold t.
RepDatum anchor_datum(const Graph& g, const RepDatum& datum, Level t);

/// Values d(v_i) on a window [lo, hi] plus tail descriptors. Inside the
/// window the rows are authoritative. Outside, sink and isolated vertices
/// follow their maps, maximal-cycle vertices continue periodically above hi,
/// other vertices are 0 above hi, and every vertex below lo follows the flow
/// equation.
class DimDistribution {
 public:
  // rows[v][i - lo]. Throws PreconditionError unless lo <= t <= hi, shapes
  // match, tails are given exactly for sinks and isolated vertices, and rows
  // agree with the tails.
  DimDistribution(Graph g, Level lo, Level hi, Level t, std::vector<std::vector<std::uint64_t>> rows,
                  std::map<Vertex, LevelMap> sink_tails, std::map<Vertex, LevelMap> isolated_tails);

  const Graph& graph() const noexcept { return graph_; }
  Level lo() const noexcept { return lo_; }
  Level hi() const noexcept { return hi_; }
  Level threshold() const noexcept { return t_; }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }
  const std::vector<std::uint64_t>& row(Vertex v) const { return rows_.at(v); }
  const std::map<Vertex, LevelMap>& sink_tails() const noexcept { return sink_tails_; }
  const std::map<Vertex, LevelMap>& isolated_tails() const noexcept { return isolated_tails_; }

  std::uint64_t value(Vertex v, Level i) const;
  std::vector<std::uint64_t> values_at(Level i) const;

  friend bool operator==(const DimDistribution&, const DimDistribution&) = default;

 private:
  Graph graph_;
  Level lo_ = 0;
  Level hi_ = 0;
  Level t_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::map<Vertex, LevelMap> sink_tails_;
  std::map<Vertex, LevelMap> isolated_tails_;
  std::vector<CycleClass> cycles_;
};

struct FlowValid {};
struct FlowViolation {
  Vertex vertex = 0;
  Level level = 0;
  std::uint64_t lhs = 0;  // d(v_i)
  std::uint64_t rhs = 0;  // sum of d(r(e)_{i+1})
};
using FlowResult = std::variant<FlowValid, FlowViolation>;

// Checks the flow equation at every regular vertex and level lo..hi-1.
// The first violation in (vertex, level) order is reported.
FlowResult validate_flow(const DimDistribution& d);

// k_i with i = j + t - s (mod n), 0-based j and i. Requires s >= t.
std::uint64_t periodic_value(const CycleClass& c, Level t, const std::vector<std::uint64_t>& tuple,
                             std::size_t j, Level s);

// Window [lo, t + L + 1] where L is the longest maximal cycle. Requires no
// non-isolated sources and lo <= t.
DimDistribution construct_distribution(const Graph& g, const RepDatum& datum, Level lo);

// Normalized datum of a flow-valid distribution. Throws ViolationError when
// the flow equation fails or the rows do not stabilize at the threshold.
RepDatum extract_datum(const DimDistribution& d);

struct Trivial {
  Level threshold = 0;  // least level from which the row is zero in the window
};
struct NotWitnessed {};
using TrivialityResult = std::variant<Trivial, NotWitnessed>;

// For v outside C(E) on a graph whose sources are isolated. On graphs with
// no sinks the whole row has to vanish.
TrivialityResult check_eventually_trivial(const DimDistribution& d, Vertex v);

struct FinDimSpace {
  std::vector<CycleClass> cycles;
  std::vector<Vertex> isolated;
};

struct FinDimClass {
  std::vector<std::uint64_t> cycle_dims;     // aligned with FinDimSpace::cycles
  std::vector<std::uint64_t> isolated_dims;  // aligned with FinDimSpace::isolated
};

FinDimSpace classify_findim(const Graph& g);
std::vector<std::uint64_t> dimension_vector(const Graph& g, const FinDimSpace& space, const FinDimClass& c);

// Vertices whose lifts may carry a finite graded representation.
std::vector<Vertex> classify_graded_findim(const Graph& g);

struct DistributionSpace {
  std::vector<CycleClass> cycles;

  std::vector<std::size_t> arities() const;
  // Number of data with all entries <= bound, saturating.
  std::uint64_t count(std::uint64_t bound) const;
  // Every datum with tuple entries <= bound, in lexicographic order.
  // Throws CapExceededError past `cap` data.
  std::vector<RepDatum> enumerate(std::uint64_t bound, std::size_t cap = 1'000'000) const;
};

// Requires a graph with no sources and no sinks.
DistributionSpace distribution_space(const Graph& g);

// d'(v_i) = d(v_{i+k}).
DimDistribution shift_distribution(const DimDistribution& d, Level k);

struct TransferResult {
  RepDatum datum;  // over the target, anchored at the source threshold
  DimDistribution distribution;
  std::string variant;  // "essential" or "isolated-sources"
};

// Moves cycle tuples along the maximal-cycle matching and isolated-vertex
// maps along the maximal-sink matching, then rebuilds over `target`.
TransferResult transfer(const DimDistribution& d, const Graph& target);

}  // namespace gqw
