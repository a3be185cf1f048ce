#include "gqw/distribution.hpp"

#include <algorithm>
#include <limits>

#include "gqw/error.hpp"
#include "gqw/ideals.hpp"

namespace gqw {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw CapExceededError("dimension overflow");
  return a + b;
}

std::size_t mod(Level a, std::size_t n) {
  Level m = a % static_cast<Level>(n);
  return static_cast<std::size_t>(m < 0 ? m + static_cast<Level>(n) : m);
}

void require_isolated_sources(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.is_source(v) && !g.is_sink(v))
      throw PreconditionError("graph has a non-isolated source " + g.vertex_name(v));
}

bool is_plain_sink(const Graph& g, Vertex v) { return g.is_sink(v) && !g.is_source(v); }

// Position of each vertex on a maximal cycle: (cycle index, offset).
std::vector<std::optional<std::pair<std::size_t, std::size_t>>> cycle_positions(
    const Graph& g, const std::vector<CycleClass>& cycles) {
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pos(g.num_vertices());
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::size_t j = 0; j < cycles[c].vertices.size(); ++j) pos[cycles[c].vertices[j]] = std::make_pair(c, j);
  return pos;
}

std::vector<std::uint64_t> rotate_tuple(const std::vector<std::uint64_t>& k, Level by) {
  std::vector<std::uint64_t> out(k.size());
  for (std::size_t m = 0; m < k.size(); ++m) out[m] = k[mod(static_cast<Level>(m) + by, k.size())];
  return out;
}

std::string at(const Graph& g, Vertex v, Level i) { return g.vertex_name(v) + "@" + std::to_string(i); }

}  // namespace

void validate_datum(const Graph& g, const RepDatum& datum) {
  for (const auto& [v, m] : datum.isolated) {
    if (v >= g.num_vertices() || !g.is_isolated(v))
      throw PreconditionError("isolated map given for a vertex that is not isolated");
  }
  for (const auto& [w, m] : datum.sinks) {
    if (w >= g.num_vertices() || !is_plain_sink(g, w))
      throw PreconditionError("sink map given for a vertex that is not a non-isolated sink");
    if (!m.eventually_trivial())
      throw PreconditionError("sink map for " + g.vertex_name(w) + " is not eventually trivial");
    if (datum.threshold && !m.is_zero() && m.threshold() > *datum.threshold)
      throw PreconditionError("threshold " + std::to_string(*datum.threshold) + " is below the vanishing level " +
                              std::to_string(m.threshold()) + " of sink " + g.vertex_name(w));
  }
  auto cycles = maximal_cycles(g);
  for (const auto& [c, k] : datum.cycles) {
    if (!std::binary_search(cycles.begin(), cycles.end(), c))
      throw PreconditionError("tuple given for a cycle that is not maximal: " + c.id(g));
    if (k.size() != c.length())
      throw PreconditionError("tuple for cycle " + c.id(g) + " has length " + std::to_string(k.size()) +
                              ", expected " + std::to_string(c.length()));
  }
}

Level canonical_threshold(const Graph& g, const RepDatum& datum) {
  (void)g;
  std::optional<Level> t;
  for (const auto& [w, m] : datum.sinks) {
    if (m.is_zero()) continue;
    t = t ? std::max(*t, m.threshold()) : m.threshold();
  }
  return t.value_or(0);
}

Level effective_threshold(const Graph& g, const RepDatum& datum) {
  return datum.threshold.value_or(canonical_threshold(g, datum));
}

RepDatum normalize(const Graph& g, const RepDatum& datum) {
  validate_datum(g, datum);
  RepDatum out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) {
      auto it = datum.isolated.find(v);
      out.isolated.emplace(v, it == datum.isolated.end() ? LevelMap{} : it->second);
    } else if (g.is_sink(v)) {
      auto it = datum.sinks.find(v);
      out.sinks.emplace(v, it == datum.sinks.end() ? LevelMap{} : it->second);
    }
  }
  Level tc = canonical_threshold(g, datum);
  Level t = datum.threshold.value_or(tc);
  for (const auto& c : maximal_cycles(g)) {
    auto it = datum.cycles.find(c);
    std::vector<std::uint64_t> k = it == datum.cycles.end() ? std::vector<std::uint64_t>(c.length(), 0) : it->second;
    out.cycles.emplace(c, rotate_tuple(k, t - tc));
  }
  return out;
}

RepDatum anchor_datum(const Graph& g, const RepDatum& datum, Level t) {
  RepDatum out = normalize(g, datum);
  Level tc = canonical_threshold(g, out);
  if (t < tc)
    throw PreconditionError("threshold " + std::to_string(t) + " is below the canonical threshold " +
                            std::to_string(tc));
  for (auto& [c, k] : out.cycles) k = rotate_tuple(k, tc - t);
  out.threshold = t;
  return out;
}

DimDistribution::DimDistribution(Graph g, Level lo, Level hi, Level t, std::vector<std::vector<std::uint64_t>> rows,
                                 std::map<Vertex, LevelMap> sink_tails, std::map<Vertex, LevelMap> isolated_tails)
    : graph_(std::move(g)),
      lo_(lo),
      hi_(hi),
      t_(t),
      rows_(std::move(rows)),
      sink_tails_(std::move(sink_tails)),
      isolated_tails_(std::move(isolated_tails)) {
  if (!(lo_ <= t_ && t_ <= hi_))
    throw PreconditionError("window [" + std::to_string(lo_) + "," + std::to_string(hi_) +
                            "] must contain the threshold " + std::to_string(t_));
  const std::size_t width = static_cast<std::size_t>(hi_ - lo_ + 1);
  if (rows_.size() != graph_.num_vertices()) throw PreconditionError("one row per vertex is required");
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    if (rows_[v].size() != width)
      throw PreconditionError("row for " + graph_.vertex_name(v) + " does not cover the window");
    bool isolated = graph_.is_isolated(v), sink = is_plain_sink(graph_, v);
    if (isolated != (isolated_tails_.count(v) > 0))
      throw PreconditionError("isolated vertices need exactly one tail each: " + graph_.vertex_name(v));
    if (sink != (sink_tails_.count(v) > 0))
      throw PreconditionError("sinks need exactly one tail each: " + graph_.vertex_name(v));
    const LevelMap* tail = isolated ? &isolated_tails_.at(v) : sink ? &sink_tails_.at(v) : nullptr;
    if (!tail) continue;
    if (sink) {
      if (!tail->eventually_trivial())
        throw PreconditionError("tail of sink " + graph_.vertex_name(v) + " is not eventually trivial");
      if (!tail->is_zero() && tail->threshold() > t_)
        throw PreconditionError("tail of sink " + graph_.vertex_name(v) + " vanishes only from level " +
                                std::to_string(tail->threshold()) + ", after the threshold");
    }
    for (Level i = lo_; i <= hi_; ++i) {
      if ((*tail)(i) != rows_[v][static_cast<std::size_t>(i - lo_)])
        throw PreconditionError("row disagrees with tail at " + at(graph_, v, i));
    }
  }
  cycles_ = maximal_cycles(graph_);
}

std::vector<std::uint64_t> DimDistribution::values_at(Level i) const {
  const std::size_t n = graph_.num_vertices();
  std::vector<std::uint64_t> out(n, 0);
  if (lo_ <= i && i <= hi_) {
    for (Vertex v = 0; v < n; ++v) out[v] = rows_[v][static_cast<std::size_t>(i - lo_)];
    return out;
  }
  if (i > hi_) {
    for (const auto& c : cycles_) {
      const std::size_t len = c.length();
      for (std::size_t j = 0; j < len; ++j) {
        Vertex src = c.vertices[mod(static_cast<Level>(j) - (i - hi_), len)];
        out[c.vertices[j]] = rows_[src].back();
      }
    }
    for (const auto& [v, m] : sink_tails_) out[v] = m(i);
    for (const auto& [v, m] : isolated_tails_) out[v] = m(i);
    return out;
  }
  std::vector<std::uint64_t> above = values_at(lo_);
  for (Level level = lo_ - 1; level >= i; --level) {
    for (Vertex v = 0; v < n; ++v) {
      if (graph_.is_sink(v)) continue;
      std::uint64_t s = 0;
      for (EdgeIndex e : graph_.out_edges(v)) s = add(s, above[graph_.edge(e).range]);
      out[v] = s;
    }
    for (const auto& [v, m] : sink_tails_) out[v] = m(level);
    for (const auto& [v, m] : isolated_tails_) out[v] = m(level);
    above = out;
  }
  return out;
}

std::uint64_t DimDistribution::value(Vertex v, Level i) const {
  if (v >= graph_.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
  if (lo_ <= i && i <= hi_) return rows_[v][static_cast<std::size_t>(i - lo_)];
  return values_at(i)[v];
}

FlowResult validate_flow(const DimDistribution& d) {
  const Graph& g = d.graph();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_sink(v)) continue;
    for (Level i = d.lo(); i < d.hi(); ++i) {
      std::uint64_t rhs = 0;
      for (EdgeIndex e : g.out_edges(v)) rhs = add(rhs, d.value(g.edge(e).range, i + 1));
      std::uint64_t lhs = d.value(v, i);
      if (lhs != rhs) return FlowViolation{v, i, lhs, rhs};
    }
  }
  return FlowValid{};
}

std::uint64_t periodic_value(const CycleClass& c, Level t, const std::vector<std::uint64_t>& tuple,
                             std::size_t j, Level s) {
  if (s < t) throw PreconditionError("level " + std::to_string(s) + " is below the threshold " + std::to_string(t));
  if (tuple.size() != c.length()) throw PreconditionError("tuple length differs from the cycle length");
  if (j >= c.length()) throw PreconditionError("cycle position out of range");
  return tuple[mod(static_cast<Level>(j) + t - s, c.length())];
}

DimDistribution construct_distribution(const Graph& g, const RepDatum& datum, Level lo) {
  require_isolated_sources(g);
  validate_datum(g, datum);
  const Level t = effective_threshold(g, datum);
  if (lo > t)
    throw PreconditionError("lower bound " + std::to_string(lo) + " exceeds the threshold " + std::to_string(t));
  RepDatum full = anchor_datum(g, datum, t);

  std::size_t longest = 0;
  for (const auto& [c, k] : full.cycles) longest = std::max(longest, c.length());
  const Level hi = t + static_cast<Level>(longest) + 1;
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t n = g.num_vertices();

  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(width, 0));
  auto cell = [&](Vertex v, Level i) -> std::uint64_t& { return rows[v][static_cast<std::size_t>(i - lo)]; };

  for (Level s = t; s <= hi; ++s) {
    for (const auto& [c, k] : full.cycles)
      for (std::size_t j = 0; j < c.length(); ++j) cell(c.vertices[j], s) = periodic_value(c, t, k, j, s);
  }
  for (Level s = hi; s >= lo; --s) {
    for (const auto& [w, m] : full.sinks) cell(w, s) = m(s);
    for (const auto& [v, m] : full.isolated) cell(v, s) = m(s);
    if (s >= t) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (g.is_sink(v)) continue;
      std::uint64_t sum = 0;
      for (EdgeIndex e : g.out_edges(v)) sum = add(sum, cell(g.edge(e).range, s + 1));
      cell(v, s) = sum;
    }
  }
  return DimDistribution(g, lo, hi, t, std::move(rows), std::move(full.sinks), std::move(full.isolated));
}

RepDatum extract_datum(const DimDistribution& d) {
  const Graph& g = d.graph();
  require_isolated_sources(g);
  FlowResult flow = validate_flow(d);
  if (auto* v = std::get_if<FlowViolation>(&flow))
    throw ViolationError("flow equation fails at " + at(g, v->vertex, v->level) + ": " + std::to_string(v->lhs) +
                         " != " + std::to_string(v->rhs));
  RepDatum out;
  out.sinks = d.sink_tails();
  out.isolated = d.isolated_tails();
  const Level tc = canonical_threshold(g, out);
  auto cycles = maximal_cycles(g);
  auto on_cycle = cycle_positions(g, cycles);
  for (const auto& c : cycles) {
    std::vector<std::uint64_t> k;
    for (Vertex v : c.vertices) k.push_back(d.value(v, tc));
    out.cycles.emplace(c, std::move(k));
  }
  for (Level s = std::max(d.lo(), tc); s <= d.hi(); ++s) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.is_sink(v)) continue;
      std::uint64_t expected = 0;
      if (auto p = on_cycle[v]) expected = periodic_value(cycles[p->first], tc, out.cycles.at(cycles[p->first]), p->second, s);
      if (d.value(v, s) != expected)
        throw ViolationError("distribution does not stabilize from level " + std::to_string(tc) + ": " +
                             at(g, v, s) + " is " + std::to_string(d.value(v, s)) + ", expected " +
                             std::to_string(expected));
    }
  }
  return out;
}

TrivialityResult check_eventually_trivial(const DimDistribution& d, Vertex v) {
  const Graph& g = d.graph();
  require_isolated_sources(g);
  if (v >= g.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
  if (g.is_isolated(v)) throw PreconditionError(g.vertex_name(v) + " is isolated");
  if (maximal_cycle_vertices(g).count(v)) throw PreconditionError(g.vertex_name(v) + " lies on a maximal cycle");
  const auto& row = d.row(v);
  bool has_sinks = false;
  for (Vertex u = 0; u < g.num_vertices(); ++u) has_sinks = has_sinks || is_plain_sink(g, u);
  if (!has_sinks) {
    bool zero = std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; });
    return zero ? TrivialityResult{Trivial{d.lo()}} : TrivialityResult{NotWitnessed{}};
  }
  if (row.back() != 0) return NotWitnessed{};
  Level theta = d.hi();
  while (theta > d.lo() && row[static_cast<std::size_t>(theta - 1 - d.lo())] == 0) --theta;
  return Trivial{theta};
}

FinDimSpace classify_findim(const Graph& g) {
  require_isolated_sources(g);
  FinDimSpace s;
  s.cycles = maximal_cycles(g);
  s.isolated = vertex_classes(g).isolated;
  return s;
}

std::vector<std::uint64_t> dimension_vector(const Graph& g, const FinDimSpace& space, const FinDimClass& c) {
  if (c.cycle_dims.size() != space.cycles.size() || c.isolated_dims.size() != space.isolated.size())
    throw PreconditionError("parameter count does not match the space");
  std::vector<std::uint64_t> out(g.num_vertices(), 0);
  for (std::size_t i = 0; i < space.cycles.size(); ++i)
    for (Vertex v : space.cycles[i].vertices) out[v] = c.cycle_dims[i];
  for (std::size_t i = 0; i < space.isolated.size(); ++i) out[space.isolated[i]] = c.isolated_dims[i];
  return out;
}

std::vector<Vertex> classify_graded_findim(const Graph& g) {
  require_isolated_sources(g);
  return vertex_classes(g).isolated;
}

std::vector<std::size_t> DistributionSpace::arities() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.length());
  return out;
}

std::uint64_t DistributionSpace::count(std::uint64_t bound) const {
  std::uint64_t total = 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.length(); ++i) total = total > max / (bound + 1) ? max : total * (bound + 1);
  return total;
}

std::vector<RepDatum> DistributionSpace::enumerate(std::uint64_t bound, std::size_t cap) const {
  if (count(bound) > cap)
    throw CapExceededError(std::to_string(count(bound)) + " distributions exceed the cap " + std::to_string(cap));
  std::size_t slots = 0;
  for (const auto& c : cycles) slots += c.length();
  std::vector<std::uint64_t> digits(slots, 0);
  std::vector<RepDatum> out;
  while (true) {
    RepDatum d;
    std::size_t pos = 0;
    for (const auto& c : cycles) {
      std::vector<std::uint64_t> k(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                   digits.begin() + static_cast<std::ptrdiff_t>(pos + c.length()));
      pos += c.length();
      d.cycles.emplace(c, std::move(k));
    }
    out.push_back(std::move(d));
    std::size_t i = slots;
    while (i > 0 && digits[i - 1] == bound) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

DistributionSpace distribution_space(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_source(v)) throw PreconditionError("graph has a source " + g.vertex_name(v));
    if (g.is_sink(v)) throw PreconditionError("graph has a sink " + g.vertex_name(v));
  }
  return DistributionSpace{maximal_cycles(g)};
}

DimDistribution shift_distribution(const DimDistribution& d, Level k) {
  std::map<Vertex, LevelMap> sinks, isolated;
  for (const auto& [v, m] : d.sink_tails()) sinks.emplace(v, m.shifted(k));
  for (const auto& [v, m] : d.isolated_tails()) isolated.emplace(v, m.shifted(k));
  return DimDistribution(d.graph(), d.lo() - k, d.hi() - k, d.threshold() - k, d.rows(), std::move(sinks),
                         std::move(isolated));
}

TransferResult transfer(const DimDistribution& d, const Graph& target) {
  const Graph& source = d.graph();
  require_isolated_sources(source);
  require_isolated_sources(target);
  auto check = candidate_check(source, target);
  if (auto* bad = std::get_if<Incompatibility>(&check))
    throw PreconditionError("incompatible signatures (" + bad->component + "): " + bad->left + " vs " + bad->right);
  const auto& matching = std::get<Matching>(check);

  RepDatum from = anchor_datum(source, extract_datum(d), d.threshold());
  for (const auto& [w, m] : from.sinks)
    if (!m.is_zero())
      throw PreconditionError("sink " + source.vertex_name(w) + " carries data with no counterpart in the target");

  auto c1 = maximal_cycles(source), c2 = maximal_cycles(target);
  RepDatum to;
  to.threshold = d.threshold();
  for (const auto& [i, j] : matching.cycles) to.cycles.emplace(c2[j], from.cycles.at(c1[i]));
  for (const auto& [z1, z2] : matching.sinks) {
    if (!source.is_isolated(z1) || !target.is_isolated(z2))
      throw PreconditionError("maximal sink is not isolated");
    to.isolated.emplace(z2, from.isolated.at(z1));
  }
  auto essential = [](const Graph& g) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (g.is_source(v) || g.is_sink(v)) return false;
    return true;
  };
  TransferResult out{to, construct_distribution(target, to, d.lo()),
                     essential(source) && essential(target) ? "essential" : "isolated-sources"};
  out.datum = anchor_datum(target, to, d.threshold());
  return out;
}

}  // namespace gqw
