#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading and
// seeded random graph and datum generators.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gqw/distribution.hpp"
#include "gqw/graph.hpp"
#include "gqw/text_io.hpp"

namespace gqw::testing {

inline std::string fixture_path(const std::string& name) { return std::string(GQW_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(GQW_GOLDEN_DIR) + "/" + name; }
inline Graph fixture_graph(const std::string& name) { return parse_graph(read_file(fixture_path(name))); }

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Graph graph_from_pairs(const std::string& name, std::size_t n,
                              const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back(Edge{"e" + std::to_string(i), pairs[i].first, pairs[i].second});
  return Graph(name, names("v", n), std::move(edges));
}

// Uniform endpoints, 1..max_v vertices and 0..max_e edges.
inline Graph random_graph(Rng& rng, std::size_t max_v, std::size_t max_e) {
  std::size_t n = uniform(rng, 1, max_v), m = uniform(rng, 0, max_e);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < m; ++i) pairs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return graph_from_pairs("R", n, pairs);
}

// Every vertex is isolated or has an in-edge.
inline Graph random_no_source_graph(Rng& rng, std::size_t max_v) {
  std::size_t n = uniform(rng, 1, max_v);
  std::size_t isolated = std::min<std::size_t>(uniform(rng, 0, 2), n - 1);
  std::size_t m = n - isolated;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < m; ++v) pairs.emplace_back(uniform(rng, 0, m - 1), v);
  for (std::size_t extra = uniform(rng, 0, m); extra > 0; --extra)
    pairs.emplace_back(uniform(rng, 0, m - 1), uniform(rng, 0, m - 1));
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return graph_from_pairs("N", n, pairs);
}

// Every vertex has an in-edge and an out-edge.
inline Graph random_no_source_no_sink_graph(Rng& rng, std::size_t max_v) {
  std::size_t n = uniform(rng, 1, max_v);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v) {
    pairs.emplace_back(uniform(rng, 0, n - 1), v);
    pairs.emplace_back(v, uniform(rng, 0, n - 1));
  }
  for (std::size_t extra = uniform(rng, 0, n / 2); extra > 0; --extra)
    pairs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return graph_from_pairs("S", n, pairs);
}

inline Rule random_rule(Rng& rng, std::uint64_t max_value) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return ZeroRule{};
    case 1:
      return ConstantRule{uniform(rng, 0, max_value)};
    default:
      return AbsRule{uniform_signed(rng, -2, 2), uniform(rng, 0, 2)};
  }
}

// Random datum with entries <= max_value. Plain sinks get zero maps when
// `zero_sinks` is set.
inline RepDatum random_datum(Rng& rng, const Graph& g, std::uint64_t max_value, bool zero_sinks = false) {
  RepDatum d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) {
      std::map<Level, std::uint64_t> table;
      for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) table[uniform_signed(rng, -3, 3)] = uniform(rng, 0, max_value);
      d.isolated[v] = LevelMap::make(random_rule(rng, max_value), table);
    } else if (g.is_sink(v)) {
      if (zero_sinks || uniform(rng, 0, 3) == 0) {
        d.sinks[v] = LevelMap{};
        continue;
      }
      Level theta = uniform_signed(rng, -2, 3);
      std::map<Level, std::uint64_t> table;
      for (Level i = theta - 3; i < theta; ++i)
        if (uniform(rng, 0, 1)) table[i] = uniform(rng, 0, max_value);
      Rule rule = uniform(rng, 0, 1) ? Rule{ZeroRule{}} : Rule{ConstantRule{uniform(rng, 0, max_value)}};
      d.sinks[v] = LevelMap::make(rule, table, theta);
    }
  }
  for (const auto& c : maximal_cycles(g)) {
    std::vector<std::uint64_t> k(c.length());
    for (auto& x : k) x = uniform(rng, 0, max_value);
    d.cycles[c] = k;
  }
  if (uniform(rng, 0, 1)) d.threshold = canonical_threshold(g, d) + uniform_signed(rng, 0, 3);
  return d;
}

// Same graph with renamed vertices and edges, vertices and edges declared in
// a shuffled order. `perm[v]` is the new index of old vertex v.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> perm;
};

inline Relabeled relabel(Rng& rng, const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> vnames(n);
  for (Vertex v = 0; v < n; ++v) vnames[perm[v]] = "r" + g.vertex_name(v);
  std::vector<EdgeIndex> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (EdgeIndex e : order) {
    const Edge& old = g.edge(e);
    edges.push_back(Edge{"r" + old.id, perm[old.source], perm[old.range]});
  }
  return {Graph(g.name() + "r", vnames, std::move(edges)), perm};
}

}  // namespace gqw::testing
