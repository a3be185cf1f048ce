#include "gqw/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "gqw/error.hpp"

namespace gqw {

Graph::Graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw PreconditionError("duplicate vertex " + vertices_[v]);
  }
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    edges_.push_back(Edge{std::move(spec.id), vertex(spec.source), vertex(spec.range)});
  }
  index();
}

Graph::Graph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges)
    : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_index_.emplace(vertices_[v], v).second)
      throw PreconditionError("duplicate vertex " + vertices_[v]);
  }
  index();
}

void Graph::index() {
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.source >= vertices_.size() || ed.range >= vertices_.size())
      throw PreconditionError("edge " + ed.id + " has an undeclared endpoint");
    if (!edge_index_.emplace(ed.id, e).second) throw PreconditionError("duplicate edge " + ed.id);
    out_[ed.source].push_back(e);
    in_[ed.range].push_back(e);
  }
}

std::optional<Vertex> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw PreconditionError("unknown vertex " + std::string(name));
  return *v;
}

bool Graph::sources_are_isolated() const {
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (is_source(v) && !is_sink(v)) return false;
  }
  return true;
}

Path Path::make(const Graph& g, std::vector<EdgeIndex> edges) {
  if (edges.empty()) throw PreconditionError("empty path");
  for (EdgeIndex e : edges) {
    if (e >= g.num_edges()) throw PreconditionError("unknown edge index " + std::to_string(e));
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (g.edge(edges[i - 1]).range != g.edge(edges[i]).source)
      throw PreconditionError("edges " + g.edge(edges[i - 1]).id + " and " + g.edge(edges[i]).id +
                              " are not composable");
  }
  Path p;
  p.source_ = g.edge(edges.front()).source;
  p.range_ = g.edge(edges.back()).range;
  p.edges_ = std::move(edges);
  return p;
}

VertexSet Path::vertices(const Graph& g) const {
  VertexSet out{source_};
  for (EdgeIndex e : edges_) out.insert(g.edge(e).range);
  return out;
}

std::string CycleClass::id(const Graph& g) const {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += '.';
    out += g.edge(edges[i]).id;
  }
  return out;
}

VertexClasses vertex_classes(const Graph& g) {
  VertexClasses c;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_sink(v)) c.sinks.push_back(v);
    if (g.is_source(v)) c.sources.push_back(v);
    if (g.is_isolated(v)) c.isolated.push_back(v);
    if (g.is_regular(v)) c.regular.push_back(v);
  }
  return c;
}

VertexSet tree(const Graph& g, const VertexSet& seeds) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> queue;
  for (Vertex v : seeds) {
    if (v >= g.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
    if (!seen[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.out_edges(u)) {
      Vertex w = g.edge(e).range;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < seen.size(); ++v)
    if (seen[v]) out.insert(out.end(), v);
  return out;
}

VertexSet tree(const Graph& g, Vertex v) { return tree(g, VertexSet{v}); }

CycleClass canonical_cycle(const Graph& g, std::vector<EdgeIndex> closed_path) {
  Path p = Path::make(g, closed_path);
  if (p.source() != p.range()) throw PreconditionError("path is not closed");
  VertexSet sources;
  for (EdgeIndex e : closed_path) {
    if (!sources.insert(g.edge(e).source).second)
      throw PreconditionError("closed path repeats a vertex");
  }
  const std::size_t n = closed_path.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      EdgeIndex a = closed_path[(r + i) % n];
      EdgeIndex b = closed_path[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  CycleClass c;
  std::rotate(closed_path.begin(), closed_path.begin() + static_cast<std::ptrdiff_t>(best),
              closed_path.end());
  c.edges = std::move(closed_path);
  for (EdgeIndex e : c.edges) c.vertices.push_back(g.edge(e).source);
  return c;
}

std::vector<CycleClass> enumerate_cycles(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  std::vector<CycleClass> out;
  std::vector<EdgeIndex> stack;
  std::vector<char> on_path(n, 0);
  std::vector<char> useful(n, 0);

  for (Vertex s = 0; s < n; ++s) {
    // Vertices >= s that reach s inside the subgraph on {>= s}.
    std::fill(useful.begin(), useful.end(), 0);
    std::deque<Vertex> queue{s};
    useful[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.in_edges(u)) {
        Vertex w = g.edge(e).source;
        if (w > s && !useful[w]) {
          useful[w] = 1;
          queue.push_back(w);
        }
      }
    }

    std::function<void(Vertex)> dfs = [&](Vertex u) {
      for (EdgeIndex e : g.out_edges(u)) {
        Vertex w = g.edge(e).range;
        if (w == s) {
          stack.push_back(e);
          if (out.size() >= cap)
            throw CapExceededError("more than " + std::to_string(cap) + " cycle classes");
          out.push_back(canonical_cycle(g, stack));
          stack.pop_back();
        } else if (w > s && useful[w] && !on_path[w]) {
          on_path[w] = 1;
          stack.push_back(e);
          dfs(w);
          stack.pop_back();
          on_path[w] = 0;
        }
      }
    };
    on_path[s] = 1;
    dfs(s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex, next out-edge position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      auto outs = g.out_edges(u);
      if (pos < outs.size()) {
        Vertex w = g.edge(outs[pos++]).range;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      Vertex done = u;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

namespace {

struct SccInfo {
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::size_t> comp_of;
  std::vector<std::size_t> internal_edges;

  bool cyclic(std::size_t c) const { return internal_edges[c] > 0; }
  bool simple_cycle(std::size_t c) const { return internal_edges[c] == comps[c].size(); }
};

SccInfo scc_info(const Graph& g) {
  SccInfo info;
  info.comps = strongly_connected_components(g);
  info.comp_of.assign(g.num_vertices(), 0);
  info.internal_edges.assign(info.comps.size(), 0);
  for (std::size_t c = 0; c < info.comps.size(); ++c)
    for (Vertex v : info.comps[c]) info.comp_of[v] = c;
  for (const Edge& e : g.edges()) {
    if (info.comp_of[e.source] == info.comp_of[e.range]) ++info.internal_edges[info.comp_of[e.source]];
  }
  return info;
}

// Vertices reached from a vertex of some cyclic component other than `skip`.
VertexSet reached_from_cycles(const Graph& g, const SccInfo& info, std::size_t skip) {
  VertexSet seeds;
  for (std::size_t c = 0; c < info.comps.size(); ++c) {
    if (c == skip || !info.cyclic(c)) continue;
    seeds.insert(info.comps[c].begin(), info.comps[c].end());
  }
  return tree(g, seeds);
}

CycleClass cycle_of_component(const Graph& g, const std::vector<Vertex>& comp) {
  Vertex start = comp.front();
  std::vector<EdgeIndex> edges;
  Vertex u = start;
  do {
    for (EdgeIndex e : g.out_edges(u)) {
      if (std::binary_search(comp.begin(), comp.end(), g.edge(e).range)) {
        edges.push_back(e);
        u = g.edge(e).range;
        break;
      }
    }
  } while (u != start);
  return canonical_cycle(g, std::move(edges));
}

}  // namespace

bool is_acyclic(const Graph& g) {
  auto info = scc_info(g);
  for (std::size_t c = 0; c < info.comps.size(); ++c)
    if (info.cyclic(c)) return false;
  return true;
}

std::vector<CycleClass> maximal_cycles(const Graph& g) {
  auto info = scc_info(g);
  std::vector<CycleClass> out;
  for (std::size_t c = 0; c < info.comps.size(); ++c) {
    if (!info.cyclic(c) || !info.simple_cycle(c)) continue;
    VertexSet reached = reached_from_cycles(g, info, c);
    bool hit = std::any_of(info.comps[c].begin(), info.comps[c].end(),
                           [&](Vertex v) { return reached.count(v) > 0; });
    if (!hit) out.push_back(cycle_of_component(g, info.comps[c]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> maximal_sinks(const Graph& g) {
  auto info = scc_info(g);
  VertexSet reached = reached_from_cycles(g, info, info.comps.size());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.is_sink(v) && !reached.count(v)) out.push_back(v);
  return out;
}

VertexSet maximal_cycle_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& c : maximal_cycles(g)) out.insert(c.vertices.begin(), c.vertices.end());
  return out;
}

namespace {

// Vertices other than v lying on a walk from an out-neighbour of v back to v
// that does not pass through v in between.
std::vector<char> csp_relevant(const Graph& g, Vertex v) {
  const std::size_t n = g.num_vertices();
  std::vector<char> fwd(n, 0), bwd(n, 0);
  std::deque<Vertex> queue;
  for (EdgeIndex e : g.out_edges(v)) {
    Vertex w = g.edge(e).range;
    if (w != v && !fwd[w]) {
      fwd[w] = 1;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.out_edges(u)) {
      Vertex w = g.edge(e).range;
      if (w != v && !fwd[w]) {
        fwd[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (EdgeIndex e : g.in_edges(v)) {
    Vertex w = g.edge(e).source;
    if (w != v && !bwd[w]) {
      bwd[w] = 1;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.in_edges(u)) {
      Vertex w = g.edge(e).source;
      if (w != v && !bwd[w]) {
        bwd[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<char> rel(n, 0);
  for (Vertex u = 0; u < n; ++u) rel[u] = fwd[u] && bwd[u];
  return rel;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                          : a + b;
}

}  // namespace

std::optional<std::uint64_t> csp_size(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
  const std::size_t n = g.num_vertices();
  auto rel = csp_relevant(g, v);

  // walks[u] = number of walks from u to v avoiding v in between.
  // Kahn order on the relevant subgraph; leftover vertices mean a cycle.
  std::vector<std::size_t> pending(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (!rel[u]) continue;
    for (EdgeIndex e : g.out_edges(u))
      if (rel[g.edge(e).range]) ++pending[u];
  }
  std::vector<std::uint64_t> walks(n, 0);
  std::deque<Vertex> ready;
  for (Vertex u = 0; u < n; ++u)
    if (rel[u] && pending[u] == 0) ready.push_back(u);
  std::size_t processed = 0, total = 0;
  for (Vertex u = 0; u < n; ++u) total += rel[u] ? 1 : 0;
  while (!ready.empty()) {
    Vertex u = ready.front();
    ready.pop_front();
    ++processed;
    std::uint64_t w = 0;
    for (EdgeIndex e : g.out_edges(u)) {
      Vertex r = g.edge(e).range;
      if (r == v) w = sat_add(w, 1);
      else if (rel[r]) w = sat_add(w, walks[r]);
    }
    walks[u] = w;
    for (EdgeIndex e : g.in_edges(u)) {
      Vertex s = g.edge(e).source;
      if (rel[s] && --pending[s] == 0) ready.push_back(s);
    }
  }
  if (processed != total) return std::nullopt;

  std::uint64_t count = 0;
  for (EdgeIndex e : g.out_edges(v)) {
    Vertex r = g.edge(e).range;
    if (r == v) count = sat_add(count, 1);
    else if (rel[r]) count = sat_add(count, walks[r]);
  }
  return count;
}

std::vector<Path> csp(const Graph& g, Vertex v, std::size_t cap) {
  auto size = csp_size(g, v);
  if (!size) throw CapExceededError("CSP(" + g.vertex_name(v) + ") is infinite");
  if (*size > cap)
    throw CapExceededError("CSP(" + g.vertex_name(v) + ") has more than " + std::to_string(cap) +
                           " paths");
  auto rel = csp_relevant(g, v);
  std::vector<Path> out;
  std::vector<EdgeIndex> stack;
  std::function<void(Vertex)> walk = [&](Vertex u) {
    for (EdgeIndex e : g.out_edges(u)) {
      Vertex r = g.edge(e).range;
      if (r == v) {
        stack.push_back(e);
        out.push_back(Path::make(g, stack));
        stack.pop_back();
      } else if (rel[r]) {
        stack.push_back(e);
        walk(r);
        stack.pop_back();
      }
    }
  };
  walk(v);
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges() < b.edges();
  });
  return out;
}

VertexSet csp_gt1(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto size = csp_size(g, v);
    if (!size || *size > 1) out.insert(v);
  }
  return out;
}

CycleClass find_cycle_reaching(const Graph& g, Vertex v) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.is_source(u)) throw PreconditionError("graph has a source: " + g.vertex_name(u));
  }
  if (v >= g.num_vertices()) throw PreconditionError("unknown vertex index " + std::to_string(v));
  // trail[k] is the k-th vertex visited; via[k] the edge into trail[k].
  std::vector<Vertex> trail{v};
  std::vector<EdgeIndex> via;
  std::vector<std::size_t> seen_at(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  seen_at[v] = 0;
  while (true) {
    EdgeIndex e = g.in_edges(trail.back()).front();
    Vertex prev = g.edge(e).source;
    via.push_back(e);
    if (seen_at[prev] != std::numeric_limits<std::size_t>::max()) {
      // Edges via[seen_at[prev]] .. via.back() traversed backwards form the cycle.
      std::vector<EdgeIndex> cycle(via.begin() + static_cast<std::ptrdiff_t>(seen_at[prev]), via.end());
      std::reverse(cycle.begin(), cycle.end());
      return canonical_cycle(g, std::move(cycle));
    }
    seen_at[prev] = trail.size();
    trail.push_back(prev);
  }
}

std::string format_vertex_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    first = false;
    out += g.vertex_name(v);
  }
  return out + "}";
}

}  // namespace gqw
