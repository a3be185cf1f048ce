#include "doctest.h"
#include "gqw/covering.hpp"
#include "gqw/error.hpp"
#include "support.hpp"

using namespace gqw;
using namespace gqw::testing;

namespace {

std::vector<std::string> relation_texts(const DoubleGraph& dg) {
  std::vector<std::string> out;
  for (const auto& r : ck_relations(dg).relations) out.push_back(relation_to_string(dg, r));
  return out;
}

std::vector<std::string> lifted_texts(const DoubleGraph& dg, const LiftedRelations& l) {
  std::vector<std::string> out;
  for (const auto& r : l.relations) out.push_back(lifted_relation_to_string(dg, r));
  return out;
}

}  // namespace

TEST_SUITE("covering") {
  TEST_CASE("double graph") {
    Graph L = fixture_graph("loop.graph");
    DoubleGraph dg = double_graph(L);
    REQUIRE(dg.num_edges() == 2);
    CHECK(dg.edge(0).id == "e");
    CHECK(dg.edge(1).id == "e*");
    CHECK(dg.edge(1).ghost());
    CHECK(dg.edge(1).source == 0);
    CHECK(dg.find("e*") == 1);
    CHECK_THROWS_AS(dg.find("f"), PreconditionError);

    Graph P = fixture_graph("edge.graph");
    DoubleGraph dp = double_graph(P);
    CHECK(dp.edge(1).source == P.vertex("v"));
    CHECK(dp.edge(1).range == P.vertex("u"));
    CHECK(dp.edge(1).weight == -1);
    CHECK(double_graph(fixture_graph("comet4.graph")).num_edges() == 16);
  }

  TEST_CASE("relations") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    CHECK(relation_texts(loop) == std::vector<std::string>{"e* e = v", "e e* = v"});
    CHECK(ck_relations(double_graph(fixture_graph("isolated.graph"))).size() == 0);

    Graph two("V", {"v", "a", "b"}, std::vector<EdgeSpec>{{"e", "v", "a"}, {"f", "v", "b"}});
    DoubleGraph dt = double_graph(two);
    CKRelationSet rel = ck_relations(dt);
    CHECK(relation_texts(dt) ==
          std::vector<std::string>{"e* e = a", "e* f = 0", "f* e = 0", "f* f = b", "e e* + f f* = v"});
    CHECK(rel.kinds.back() == RelationKind::Sum);
    CHECK(rel.kinds.front() == RelationKind::Pair);
  }

  TEST_CASE("windows") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    CoveringWindow w = covering_window(loop, 0, 1);
    CHECK(w.vertices() == std::vector<LevelVertex>{{0, 0}, {0, 1}});
    REQUIRE(w.edges().size() == 2);
    CHECK(w.edges()[0] == WindowEdge{0, 1, {0, 0}, {0, 1}});
    CHECK(w.edges()[1] == WindowEdge{1, 1, {0, 1}, {0, 0}});

    Graph empty("Z", {}, std::vector<EdgeSpec>{});
    CoveringWindow we = covering_window(double_graph(empty), -3, 3);
    CHECK(we.vertices().empty());
    CHECK(we.edges().empty());

    CoveringWindow wp = covering_window(double_graph(fixture_graph("edge.graph")), 0, 0);
    CHECK(wp.vertices().size() == 2);
    CHECK(wp.edges().empty());
    CHECK_THROWS_AS(covering_window(loop, 2, 1), PreconditionError);
  }

  TEST_CASE("lifting paths") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    LiftedPath e = lift_path(loop, {0}, 0);
    REQUIRE(e.edges.size() == 1);
    CHECK(e.edges[0].label == 1);
    CHECK(e.end() == LevelVertex{0, 1});

    LiftedPath ee = lift_path(loop, {0, 1}, 0);
    CHECK(ee.edges[0].label == 1);
    CHECK(ee.edges[1].label == 1);
    CHECK(ee.end() == LevelVertex{0, 0});

    DoubleGraph c = double_graph(fixture_graph("comet4.graph"));
    LiftedPath around = lift_path(c, {0, 1, 2, 3}, 5);
    CHECK(around.start == LevelVertex{0, 5});
    CHECK(around.end() == LevelVertex{0, 9});
    CHECK(lift_trivial(3, -2).end() == LevelVertex{3, -2});
    CHECK_THROWS_AS(lift_path(c, {0, 2}, 0), PreconditionError);
  }

  TEST_CASE("lifting relations") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    CKRelationSet rel = ck_relations(loop);
    LiftedRelations l = lift_relations(loop, rel, 0, 1);
    CHECK(lifted_texts(loop, l) == std::vector<std::string>{"e*_1 e_1 = v_1", "e_1 e*_1 = v_0"});
    CHECK(l.dropped.size() == 2);

    CKRelationSet none;
    CHECK(lift_relations(loop, none, 0, 3).relations.empty());

    LiftedRelations tiny = lift_relations(loop, rel, 4, 4);
    CHECK(tiny.relations.empty());
    CHECK(tiny.dropped.size() == 2);
  }

  TEST_CASE("shifting windows") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    CoveringWindow w = covering_window(loop, 0, 1);
    CHECK(shift_window(w, 0) == w);
    CoveringWindow s = shift_window(w, 2);
    CHECK(s.lo() == -2);
    CHECK(s.hi() == -1);
    CHECK(s == covering_window(loop, -2, -1));
    CHECK(shift_window(s, -2) == w);
  }

  TEST_CASE("dot export") {
    DoubleGraph loop = double_graph(fixture_graph("loop.graph"));
    std::string dot = to_dot(loop, covering_window(loop, 0, 1));
    CHECK(dot.find("\"v@0\"") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(to_dot(loop).find("digraph") != std::string::npos);
  }
}

TEST_SUITE("covering properties") {
  TEST_CASE("level arithmetic and restriction") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = random_graph(rng, 5, 8);
      DoubleGraph dg = double_graph(g);
      Level lo = uniform_signed(rng, -4, 2), hi = lo + uniform_signed(rng, 0, 5);
      CoveringWindow w = covering_window(dg, lo, hi);
      for (const auto& e : w.edges()) {
        CHECK(e.range.level - e.source.level == dg.edge(e.edge).weight);
        CHECK(w.contains(e.source.level));
        CHECK(w.contains(e.range.level));
      }
      Level lo2 = lo + uniform_signed(rng, 0, hi - lo);
      Level hi2 = lo2 + uniform_signed(rng, 0, hi - lo2);
      CoveringWindow sub = covering_window(dg, lo2, hi2);
      std::vector<WindowEdge> kept;
      for (const auto& e : w.edges())
        if (sub.contains(e.source.level) && sub.contains(e.range.level)) kept.push_back(e);
      CHECK(kept == sub.edges());

      Level k = uniform_signed(rng, -5, 5);
      CoveringWindow s = shift_window(w, k);
      CHECK(s.vertices().size() == w.vertices().size());
      CHECK(s.edges().size() == w.edges().size());
      CHECK(s == covering_window(dg, lo - k, hi - k));
      CHECK(shift_window(s, -k) == w);
    }
  }

  TEST_CASE("lifted path end level is the weight sum") {
    Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
      Graph g = random_graph(rng, 4, 8);
      if (g.num_edges() == 0) continue;
      DoubleGraph dg = double_graph(g);
      std::vector<EdgeIndex> path;
      Vertex at = uniform(rng, 0, g.num_vertices() - 1);
      Level sum = 0;
      for (std::size_t len = uniform(rng, 1, 6); len > 0; --len) {
        std::vector<EdgeIndex> out;
        for (EdgeIndex e = 0; e < dg.num_edges(); ++e)
          if (dg.edge(e).source == at) out.push_back(e);
        if (out.empty()) break;
        EdgeIndex e = out[uniform(rng, 0, out.size() - 1)];
        path.push_back(e);
        sum += dg.edge(e).weight;
        at = dg.edge(e).range;
      }
      if (path.empty()) continue;
      Level j = uniform_signed(rng, -3, 3);
      LiftedPath p = lift_path(dg, path, j);
      CHECK(p.end().level == j + sum);
      CHECK(p.end().vertex == at);
    }
  }

  TEST_CASE("real-edge windows are acyclic") {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = random_graph(rng, 5, 8);
      DoubleGraph dg = double_graph(g);
      CoveringWindow w = covering_window(dg, -2, 2);
      for (const auto& e : w.edges())
        if (!dg.edge(e.edge).ghost()) CHECK(e.range.level == e.source.level + 1);
    }
  }
}
