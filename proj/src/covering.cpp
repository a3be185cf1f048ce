#include "gqw/covering.hpp"

#include <algorithm>
#include <sstream>

#include "gqw/error.hpp"

namespace gqw {

DoubleGraph::DoubleGraph(Graph g) : base_(std::move(g)) {
  const std::size_t n = base_.num_edges();
  edges_.reserve(2 * n);
  for (EdgeIndex e = 0; e < n; ++e) {
    const Edge& ed = base_.edge(e);
    edges_.push_back(DoubleEdge{ed.id, ed.source, ed.range, +1, e});
  }
  for (EdgeIndex e = 0; e < n; ++e) {
    const Edge& ed = base_.edge(e);
    edges_.push_back(DoubleEdge{ed.id + "*", ed.range, ed.source, -1, e});
  }
}

EdgeIndex DoubleGraph::find(const std::string& id) const {
  bool ghosted = !id.empty() && id.back() == '*';
  auto base = base_.find_edge(ghosted ? id.substr(0, id.size() - 1) : id);
  if (!base) throw PreconditionError("unknown edge " + id);
  return ghosted ? ghost(*base) : real(*base);
}

DoubleGraph double_graph(const Graph& g) { return DoubleGraph(g); }

CKRelationSet ck_relations(const DoubleGraph& dg) {
  const Graph& g = dg.base();
  CKRelationSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto outs = g.out_edges(v);
    for (EdgeIndex e : outs) {
      for (EdgeIndex f : outs) {
        Relation r;
        r.id = g.edge(e).id + "*" + g.edge(f).id;
        r.source = g.edge(e).range;
        r.range = g.edge(f).range;
        r.terms.push_back(PathTerm{1, r.source, {dg.ghost(e), dg.real(f)}});
        if (e == f) r.terms.push_back(PathTerm{-1, r.source, {}});
        out.relations.push_back(std::move(r));
        out.kinds.push_back(RelationKind::Pair);
      }
    }
    if (outs.empty()) continue;
    Relation sum;
    sum.id = "sum(" + g.vertex_name(v) + ")";
    sum.source = sum.range = v;
    for (EdgeIndex e : outs) sum.terms.push_back(PathTerm{1, v, {dg.real(e), dg.ghost(e)}});
    sum.terms.push_back(PathTerm{-1, v, {}});
    out.relations.push_back(std::move(sum));
    out.kinds.push_back(RelationKind::Sum);
  }
  return out;
}

namespace {

// Renders "lhs = rhs" with positive terms on the left.
template <typename Term, typename Render>
std::string render_equation(const std::vector<Term>& terms, Render render) {
  std::string lhs, rhs;
  for (const auto& t : terms) {
    std::string& side = t.coef > 0 ? lhs : rhs;
    std::int64_t mag = t.coef > 0 ? t.coef : -t.coef;
    if (!side.empty()) side += " + ";
    if (mag != 1) side += std::to_string(mag) + " ";
    side += render(t);
  }
  return (lhs.empty() ? "0" : lhs) + " = " + (rhs.empty() ? "0" : rhs);
}

std::string label(Level l) { return "_" + std::to_string(l); }

}  // namespace

std::string relation_to_string(const DoubleGraph& dg, const Relation& r) {
  return render_equation(r.terms, [&](const PathTerm& t) {
    if (t.edges.empty()) return dg.base().vertex_name(t.start);
    std::string s;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      if (i) s += ' ';
      s += dg.edge(t.edges[i]).id;
    }
    return s;
  });
}

WindowEdge lift_edge(const DoubleGraph& dg, EdgeIndex edge, Level from) {
  const DoubleEdge& d = dg.edge(edge);
  WindowEdge w;
  w.edge = edge;
  w.label = d.ghost() ? from : from + 1;
  w.source = {d.source, from};
  w.range = {d.range, from + d.weight};
  return w;
}

CoveringWindow::CoveringWindow(const DoubleGraph& dg, Level lo, Level hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw PreconditionError("window lower bound exceeds upper bound");
  const Graph& g = dg.base();
  for (Level l = lo; l <= hi; ++l)
    for (Vertex v = 0; v < g.num_vertices(); ++v) vertices_.push_back({v, l});
  // Labels i in (lo, hi]: real e_i starts at i-1, ghost e*_i starts at i.
  for (Level i = lo + 1; i <= hi; ++i) {
    for (EdgeIndex e = 0; e < dg.num_edges(); ++e)
      edges_.push_back(lift_edge(dg, e, dg.edge(e).ghost() ? i : i - 1));
  }
}

CoveringWindow covering_window(const DoubleGraph& dg, Level lo, Level hi) {
  return CoveringWindow(dg, lo, hi);
}

LiftedPath lift_path(const DoubleGraph& dg, const std::vector<EdgeIndex>& path, Level j) {
  if (path.empty()) throw PreconditionError("empty path");
  LiftedPath out;
  out.start = {dg.edge(path.front()).source, j};
  Level level = j;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0 && dg.edge(path[k - 1]).range != dg.edge(path[k]).source)
      throw PreconditionError("edges " + dg.edge(path[k - 1]).id + " and " + dg.edge(path[k]).id +
                              " are not composable");
    out.edges.push_back(lift_edge(dg, path[k], level));
    level = out.edges.back().range.level;
  }
  return out;
}

LiftedPath lift_trivial(Vertex v, Level j) { return LiftedPath{{v, j}, {}}; }

namespace {

bool inside(const LiftedPath& p, Level lo, Level hi) {
  auto ok = [&](Level l) { return lo <= l && l <= hi; };
  if (!ok(p.start.level)) return false;
  return std::all_of(p.edges.begin(), p.edges.end(), [&](const WindowEdge& e) { return ok(e.range.level); });
}

}  // namespace

LiftedRelations lift_relations(const DoubleGraph& dg, const CKRelationSet& rel, Level lo, Level hi) {
  if (lo > hi) throw PreconditionError("window lower bound exceeds upper bound");
  LiftedRelations out;
  for (std::size_t r = 0; r < rel.relations.size(); ++r) {
    const Relation& relation = rel.relations[r];
    for (Level j = lo; j <= hi; ++j) {
      LiftedRelation lifted{r, j, {}};
      bool ok = true;
      for (const PathTerm& t : relation.terms) {
        LiftedPath p = t.edges.empty() ? lift_trivial(t.start, j) : lift_path(dg, t.edges, j);
        if (!inside(p, lo, hi)) {
          ok = false;
          break;
        }
        lifted.terms.push_back(LiftedTerm{t.coef, std::move(p)});
      }
      if (ok) out.relations.push_back(std::move(lifted));
      else out.dropped.push_back(BoundaryDrop{r, j});
    }
  }
  return out;
}

std::string lifted_relation_to_string(const DoubleGraph& dg, const LiftedRelation& r) {
  return render_equation(r.terms, [&](const LiftedTerm& t) {
    if (t.path.edges.empty()) return dg.base().vertex_name(t.path.start.vertex) + label(t.path.start.level);
    std::string s;
    for (std::size_t i = 0; i < t.path.edges.size(); ++i) {
      if (i) s += ' ';
      s += dg.edge(t.path.edges[i].edge).id + label(t.path.edges[i].label);
    }
    return s;
  });
}

CoveringWindow shift_window(const CoveringWindow& w, Level k) {
  CoveringWindow out;
  out.lo_ = w.lo_ - k;
  out.hi_ = w.hi_ - k;
  out.vertices_ = w.vertices_;
  for (auto& v : out.vertices_) v.level -= k;
  out.edges_ = w.edges_;
  for (auto& e : out.edges_) {
    e.label -= k;
    e.source.level -= k;
    e.range.level -= k;
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string at(const Graph& g, const LevelVertex& v) {
  return quoted(g.vertex_name(v.vertex) + "@" + std::to_string(v.level));
}

}  // namespace

std::string to_dot(const DoubleGraph& dg) {
  const Graph& g = dg.base();
  std::ostringstream os;
  os << "digraph " << quoted(g.name().empty() ? "E" : g.name()) << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "  " << quoted(g.vertex_name(v)) << ";\n";
  for (const DoubleEdge& e : dg.edges()) {
    os << "  " << quoted(g.vertex_name(e.source)) << " -> " << quoted(g.vertex_name(e.range))
       << " [label=" << quoted(e.id) << (e.ghost() ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const DoubleGraph& dg, const CoveringWindow& w) {
  const Graph& g = dg.base();
  std::ostringstream os;
  os << "digraph " << quoted((g.name().empty() ? "E" : g.name()) + "-cover") << " {\n";
  for (const LevelVertex& v : w.vertices()) os << "  " << at(g, v) << ";\n";
  for (const WindowEdge& e : w.edges()) {
    const DoubleEdge& d = dg.edge(e.edge);
    os << "  " << at(g, e.source) << " -> " << at(g, e.range)
       << " [label=" << quoted(d.id + label(e.label)) << (d.ghost() ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gqw
