#include "gqw/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "gqw/error.hpp"

namespace gqw {

bool is_hereditary(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    for (EdgeIndex e : g.out_edges(v))
      if (!s.count(g.edge(e).range)) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.count(v) || g.is_sink(v)) continue;
    auto outs = g.out_edges(v);
    if (std::all_of(outs.begin(), outs.end(), [&](EdgeIndex e) { return s.count(g.edge(e).range) > 0; }))
      return false;
  }
  return true;
}

HSatSet HSatSet::make(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (v >= g.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
  if (!is_hereditary(g, s)) throw PreconditionError(format_vertex_set(g, s) + " is not hereditary");
  if (!is_saturated(g, s)) throw PreconditionError(format_vertex_set(g, s) + " is not saturated");
  HSatSet h;
  h.vertices_ = std::move(s);
  return h;
}

HSatSet saturate(const Graph& g, const VertexSet& s) {
  VertexSet cur = tree(g, s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (cur.count(v) || g.is_sink(v)) continue;
      auto outs = g.out_edges(v);
      if (std::all_of(outs.begin(), outs.end(),
                      [&](EdgeIndex e) { return cur.count(g.edge(e).range) > 0; })) {
        cur.insert(v);
        grew = true;
      }
    }
  }
  HSatSet h;
  h.vertices_ = std::move(cur);
  return h;
}

namespace {

using Mask = std::uint32_t;

struct MaskGraph {
  std::vector<Mask> succ;  // out-neighbours of each vertex
  Mask regular = 0;
};

MaskGraph mask_graph(const Graph& g) {
  MaskGraph m;
  m.succ.assign(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) m.succ[e.source] |= Mask{1} << e.range;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!g.is_sink(v)) m.regular |= Mask{1} << v;
  return m;
}

bool mask_hereditary(const MaskGraph& m, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    int v = __builtin_ctz(rest);
    if (m.succ[v] & ~s) return false;
  }
  return true;
}

bool mask_saturated(const MaskGraph& m, Mask s) {
  for (Mask rest = m.regular & ~s; rest; rest &= rest - 1) {
    int v = __builtin_ctz(rest);
    if ((m.succ[v] & ~s) == 0) return false;
  }
  return true;
}

Mask mask_saturate(const MaskGraph& m, Mask s) {
  Mask cur = s;
  while (true) {
    Mask next = cur;
    for (Mask rest = cur; rest; rest &= rest - 1) next |= m.succ[__builtin_ctz(rest)];
    for (Mask rest = m.regular & ~next; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      if ((m.succ[v] & ~next) == 0) next |= Mask{1} << v;
    }
    if (next == cur) return cur;
    cur = next;
  }
}

VertexSet to_set(Mask s) {
  VertexSet out;
  for (Mask rest = s; rest; rest &= rest - 1) out.insert(out.end(), static_cast<Vertex>(__builtin_ctz(rest)));
  return out;
}

}  // namespace

HSatLattice enumerate_hsat(const Graph& g, std::size_t vertex_cap) {
  const std::size_t n = g.num_vertices();
  if (n > vertex_cap)
    throw CapExceededError("graph has " + std::to_string(n) + " vertices, hsat cap is " +
                           std::to_string(vertex_cap));
  if (n > 31) throw CapExceededError("hsat enumeration supports at most 31 vertices");
  MaskGraph m = mask_graph(g);

  std::vector<Mask> found;
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  for (std::uint64_t raw = 0; raw <= full; ++raw) {
    Mask s = static_cast<Mask>(raw);
    if (mask_hereditary(m, s) && mask_saturated(m, s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return to_set(a) < to_set(b);
  });

  HSatLattice out;
  std::map<Mask, std::size_t> position;
  for (std::size_t i = 0; i < found.size(); ++i) {
    position.emplace(found[i], i);
    out.members.push_back(HSatSet::make(g, to_set(found[i])));
  }
  // Upper covers of H are the minimal sets among saturate(H + v), v not in H.
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<Mask> cands;
    for (Mask rest = full & ~found[i]; rest; rest &= rest - 1)
      cands.push_back(mask_saturate(m, found[i] | (Mask{1} << __builtin_ctz(rest))));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<std::size_t> ups;
    for (Mask c : cands) {
      bool minimal = std::none_of(cands.begin(), cands.end(),
                                  [&](Mask d) { return d != c && (d & ~c) == 0; });
      if (minimal) ups.push_back(position.at(c));
    }
    std::sort(ups.begin(), ups.end());
    for (std::size_t j : ups) out.covers.emplace_back(i, j);
  }
  return out;
}

Graph quotient_graph(const Graph& g, const HSatSet& h) {
  HSatSet::make(g, h.vertices());
  std::vector<std::string> names;
  std::vector<Vertex> remap(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (h.contains(v)) continue;
    remap[v] = names.size();
    names.push_back(g.vertex_name(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (h.contains(e.source) || h.contains(e.range)) continue;
    edges.push_back(Edge{e.id, remap[e.source], remap[e.range]});
  }
  return Graph(g.name(), std::move(names), std::move(edges));
}

Graph remove_sources(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const Edge& e : g.edges()) {
    ++indeg[e.range];
    ++outdeg[e.source];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || indeg[v] != 0 || outdeg[v] == 0) continue;
      alive[v] = 0;
      changed = true;
      for (EdgeIndex e : g.out_edges(v)) --indeg[g.edge(e).range];
    }
  }
  std::vector<std::string> names;
  std::vector<Vertex> remap(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    remap[v] = names.size();
    names.push_back(g.vertex_name(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (alive[e.source] && alive[e.range]) edges.push_back(Edge{e.id, remap[e.source], remap[e.range]});
  }
  return Graph(g.name(), std::move(names), std::move(edges));
}

std::string to_string(const QuotientKind& k) {
  if (auto* c = std::get_if<CometOfPeriod>(&k)) return "comet(" + std::to_string(c->period) + ")";
  if (std::holds_alternative<AcyclicUniqueSink>(k)) return "acyclic-unique-sink";
  return "other";
}

QuotientKind classify_graph(const Graph& g) {
  Graph core = remove_sources(g);
  if (core.num_vertices() > 0 && core.num_edges() == core.num_vertices()) {
    auto comps = strongly_connected_components(core);
    if (comps.size() == 1) return CometOfPeriod{core.num_vertices()};
  }
  if (is_acyclic(g) && vertex_classes(g).sinks.size() == 1) return AcyclicUniqueSink{};
  return OtherQuotient{};
}

QuotientKind classify_quotient(const Graph& g, const HSatSet& h) {
  return classify_graph(quotient_graph(g, h));
}

TalMax talmax(const Graph& g) {
  TalMax out;
  for (const auto& c : maximal_cycles(g)) {
    VertexSet on_cycle = c.vertex_set();
    VertexSet h;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      VertexSet t = tree(g, v);
      bool meets = std::any_of(t.begin(), t.end(), [&](Vertex w) { return on_cycle.count(w) > 0; });
      if (!meets) h.insert(v);
    }
    out.cycles.push_back(CycleIdeal{c, HSatSet::make(g, std::move(h)), c.length()});
  }
  for (Vertex z : maximal_sinks(g)) {
    VertexSet h;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!tree(g, v).count(z)) h.insert(v);
    out.sinks.push_back(SinkIdeal{z, HSatSet::make(g, std::move(h))});
  }
  return out;
}

Signature signature(const Graph& g) {
  Signature s;
  for (const auto& c : maximal_cycles(g)) s.cycle_lengths.push_back(c.length());
  std::sort(s.cycle_lengths.begin(), s.cycle_lengths.end());
  s.maximal_sinks = maximal_sinks(g).size();
  return s;
}

namespace {
std::string format_lengths(const std::vector<std::size_t>& lengths) {
  std::string out = "{";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths[i]);
  }
  return out + "}";
}
}  // namespace

std::string to_string(const Signature& s) {
  return "(" + format_lengths(s.cycle_lengths) + "," + std::to_string(s.maximal_sinks) + ")";
}

CandidateResult candidate_check(const Graph& g1, const Graph& g2) {
  Signature s1 = signature(g1), s2 = signature(g2);
  if (s1.cycle_lengths != s2.cycle_lengths)
    return Incompatibility{"cycles", format_lengths(s1.cycle_lengths), format_lengths(s2.cycle_lengths)};
  if (s1.maximal_sinks != s2.maximal_sinks)
    return Incompatibility{"sinks", std::to_string(s1.maximal_sinks), std::to_string(s2.maximal_sinks)};

  auto order = [](const std::vector<CycleClass>& cs) {
    std::vector<std::size_t> idx(cs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return cs[a].length() < cs[b].length(); });
    return idx;
  };
  auto c1 = maximal_cycles(g1), c2 = maximal_cycles(g2);
  auto o1 = order(c1), o2 = order(c2);
  Matching m;
  for (std::size_t i = 0; i < o1.size(); ++i) m.cycles.emplace_back(o1[i], o2[i]);
  auto z1 = maximal_sinks(g1), z2 = maximal_sinks(g2);
  for (std::size_t i = 0; i < z1.size(); ++i) m.sinks.emplace_back(z1[i], z2[i]);
  return m;
}

bool ideal_membership(const TalentedElement& x, const HSatSet& h) {
  for (Vertex v : x.support())
    if (!h.contains(v)) return false;
  return true;
}

}  // namespace gqw
