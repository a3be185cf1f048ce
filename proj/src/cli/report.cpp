#include "report.hpp"

#include "gqw/cli.hpp"
#include "gqw/text_io.hpp"

namespace gqw::report {

Json vertex_list(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.vertex_name(v));
  return out;
}

Json vertex_list(const Graph& g, const VertexSet& vs) { return vertex_list(g, std::vector<Vertex>(vs.begin(), vs.end())); }

Json cycle(const Graph& g, const CycleClass& c) {
  return Json{{"id", c.id(g)}, {"length", c.length()}, {"vertices", vertex_list(g, c.vertices)}};
}

Json signature(const Signature& s) {
  return Json{{"cycle_lengths", s.cycle_lengths}, {"maximal_sinks", s.maximal_sinks}, {"text", to_string(s)}};
}

Json candidate(const Graph& g1, const Graph& g2, const CandidateResult& r) {
  if (auto* bad = std::get_if<Incompatibility>(&r)) {
    return Json{{"verdict", "incompatible"},
                {"witness", {{"component", bad->component}, {"left", bad->left}, {"right", bad->right}}}};
  }
  const auto& m = std::get<Matching>(r);
  auto c1 = maximal_cycles(g1), c2 = maximal_cycles(g2);
  Json cycles = Json::array(), sinks = Json::array();
  for (const auto& [i, j] : m.cycles) cycles.push_back(Json::array({c1[i].id(g1), c2[j].id(g2)}));
  for (const auto& [a, b] : m.sinks) sinks.push_back(Json::array({g1.vertex_name(a), g2.vertex_name(b)}));
  return Json{{"verdict", "compatible"}, {"matching", {{"cycles", cycles}, {"sinks", sinks}}}};
}

Json lattice(const Graph& g, const HSatLattice& l) {
  Json members = Json::array();
  for (std::size_t i = 0; i < l.members.size(); ++i) {
    members.push_back(Json{{"index", i},
                           {"vertices", vertex_list(g, l.members[i].vertices())},
                           {"quotient", to_string(classify_quotient(g, l.members[i]))}});
  }
  Json covers = Json::array();
  for (const auto& [i, j] : l.covers) covers.push_back(Json::array({i, j}));
  return Json{{"members", members}, {"covers", covers}};
}

Json talmax(const Graph& g, const TalMax& t) {
  Json cycles = Json::array(), sinks = Json::array();
  for (const auto& c : t.cycles)
    cycles.push_back(Json{{"cycle", c.cycle.id(g)}, {"period", c.period}, {"ideal", vertex_list(g, c.ideal.vertices())}});
  for (const auto& s : t.sinks)
    sinks.push_back(Json{{"sink", g.vertex_name(s.sink)}, {"ideal", vertex_list(g, s.ideal.vertices())}});
  return Json{{"cycles", cycles}, {"sinks", sinks}};
}

namespace {
std::string at(const Graph& g, const LevelVertex& v) { return g.vertex_name(v.vertex) + "@" + std::to_string(v.level); }
}  // namespace

Json window(const DoubleGraph& dg, const CoveringWindow& w) {
  const Graph& g = dg.base();
  Json vertices = Json::array(), edges = Json::array();
  for (const auto& v : w.vertices()) vertices.push_back(at(g, v));
  for (const auto& e : w.edges()) {
    const DoubleEdge& d = dg.edge(e.edge);
    edges.push_back(Json{{"id", d.id + "_" + std::to_string(e.label)},
                         {"source", at(g, e.source)},
                         {"range", at(g, e.range)},
                         {"weight", d.weight}});
  }
  return Json{{"lo", w.lo()}, {"hi", w.hi()}, {"vertices", vertices}, {"edges", edges}};
}

Json lifted(const DoubleGraph& dg, const CKRelationSet& rel, const LiftedRelations& l) {
  Json relations = Json::array(), dropped = Json::array();
  for (const auto& r : l.relations) {
    relations.push_back(Json{{"relation", rel.relations[r.relation].id},
                             {"level", r.level},
                             {"text", lifted_relation_to_string(dg, r)}});
  }
  for (const auto& d : l.dropped) dropped.push_back(Json{{"relation", rel.relations[d.relation].id}, {"level", d.level}});
  return Json{{"relations", relations}, {"dropped", dropped}};
}

Json level_map(const LevelMap& m) { return serialize_level_map(m); }

Json datum(const Graph& g, const RepDatum& d) {
  Json out;
  if (d.threshold) out["threshold"] = *d.threshold;
  Json isolated = Json::object(), sinks = Json::object(), cycles = Json::object();
  for (const auto& [v, m] : d.isolated) isolated[g.vertex_name(v)] = level_map(m);
  for (const auto& [w, m] : d.sinks) sinks[g.vertex_name(w)] = level_map(m);
  for (const auto& [c, k] : d.cycles) cycles[c.id(g)] = k;
  out["isolated"] = isolated;
  out["sinks"] = sinks;
  out["cycles"] = cycles;
  return out;
}

Json distribution(const DimDistribution& d) {
  const Graph& g = d.graph();
  Json rows = Json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v) rows[g.vertex_name(v)] = d.row(v);
  Json tails = Json::object();
  for (const auto& [w, m] : d.sink_tails()) tails[g.vertex_name(w)] = level_map(m);
  for (const auto& [v, m] : d.isolated_tails()) tails[g.vertex_name(v)] = level_map(m);
  return Json{{"window", Json::array({d.lo(), d.hi()})}, {"threshold", d.threshold()}, {"rows", rows}, {"tails", tails}};
}

Json flow(const Graph& g, const FlowResult& r) {
  if (auto* v = std::get_if<FlowViolation>(&r)) {
    return Json{{"valid", false},
                {"vertex", g.vertex_name(v->vertex)},
                {"level", v->level},
                {"lhs", v->lhs},
                {"rhs", v->rhs}};
  }
  return Json{{"valid", true}};
}

namespace {
Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
}  // namespace

Json rational(const mpq_class& q) { return Json::array({integer(q.get_num()), integer(q.get_den())}); }

Json matrix(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json ck(const CKResult& r) {
  if (auto* v = std::get_if<CKViolation>(&r))
    return Json{{"valid", false}, {"relation", v->relation}, {"residual", matrix(v->residual)}};
  return Json{{"valid", true}};
}

Json shape(const Graph& g, const ShapeResult& r) {
  if (auto* n = std::get_if<NonConformant>(&r))
    return Json{{"conformant", false}, {"vertex", g.vertex_name(n->vertex)}, {"reason", n->reason}};
  return Json{{"conformant", true}};
}

Json envelope(const std::string& command, const std::vector<std::string>& args, Json result) {
  Json echo = Json::array();
  for (const auto& a : args) {
    auto slash = a.find_last_of('/');
    echo.push_back(slash == std::string::npos ? a : a.substr(slash + 1));
  }
  return Json{{"command", command}, {"arguments", echo}, {"version", kVersion}, {"result", std::move(result)}};
}

}  // namespace gqw::report
