#include "doctest.h"
#include "gqw/error.hpp"
#include "gqw/rep_matrix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gqw;
using namespace gqw::testing;

namespace {

using Rows = std::vector<std::vector<mpq_class>>;

FiniteRep fixture_rep(const Graph& g, const std::string& name) { return parse_rep(g, read_file(fixture_path(name))); }

FiniteRep loop_rep(const Rows& e, const Rows& ghost) {
  return FiniteRep(fixture_graph("loop.graph"), {e.size()},
                   {RationalMatrix::from_rows(e), RationalMatrix::from_rows(ghost)});
}

}  // namespace

TEST_SUITE("rep matrix") {
  TEST_CASE("rational matrices") {
    RationalMatrix a = RationalMatrix::from_rows({{1, 1}, {0, 1}});
    RationalMatrix b = RationalMatrix::from_rows({{mpq_class(1, 2), 0}, {3, -1}});
    CHECK((a * b).to_string() == "[[7/2,-1],[3,-1]]");
    CHECK((a + b - b) == a);
    CHECK(a.scaled(2).to_string() == "[[2,2],[0,2]]");
    CHECK(*a.inverse() == RationalMatrix::from_rows({{1, -1}, {0, 1}}));
    CHECK_FALSE(RationalMatrix::from_rows({{1, 2}, {2, 4}}).inverse().has_value());
    CHECK(RationalMatrix::identity(2) * a == a);
    CHECK(RationalMatrix(2, 3).is_zero());
    CHECK_THROWS_AS(RationalMatrix::from_rows({{1, 2}, {3}}), PreconditionError);
    CHECK_THROWS_AS(a * RationalMatrix(3, 1), PreconditionError);
  }

  TEST_CASE("example representations") {
    Graph L = fixture_graph("loop.graph");
    FiniteRep rho = fixture_rep(L, "example_rho.rep");
    FiniteRep sigma = fixture_rep(L, "example_sigma.rep");
    CHECK(std::holds_alternative<CKValid>(validate_ck(rho)));
    CHECK(std::holds_alternative<CKValid>(validate_ck(sigma)));
    CHECK(dim_vector(rho) == std::vector<std::size_t>{2});
    CHECK(std::holds_alternative<Conformant>(shape_check(rho)));

    CKResult bad = validate_ck(fixture_rep(L, "perturbed.rep"));
    REQUIRE(std::holds_alternative<CKViolation>(bad));
    CHECK(std::get<CKViolation>(bad).relation == "e*e");
    CHECK_FALSE(std::get<CKViolation>(bad).residual.is_zero());
  }

  TEST_CASE("module action") {
    Graph L = fixture_graph("loop.graph");
    FiniteRep rho = fixture_rep(L, "example_rho.rep");
    CHECK(rep_to_module_action(rho, std::vector<EdgeIndex>{0}) == rho.matrix(0));
    CHECK(rep_to_module_action(rho, std::vector<EdgeIndex>{0, 1}) == RationalMatrix::identity(2));
    CHECK(rep_to_module_action(rho, std::vector<EdgeIndex>{1, 0}) == RationalMatrix::identity(2));
    CHECK(rep_to_module_action(rho, Vertex{0}) == RationalMatrix::identity(2));
    // rho(e e) = rho(e) rho(e)
    CHECK(rep_to_module_action(rho, std::vector<EdgeIndex>{0, 0}) == rho.matrix(0) * rho.matrix(0));
  }

  TEST_CASE("shape checks") {
    Graph C = fixture_graph("comet4.graph");
    std::vector<std::size_t> dims(C.num_vertices(), 0);
    std::vector<RationalMatrix> ms;
    DoubleGraph dg = double_graph(C);
    auto build = [&](const std::vector<std::size_t>& n) {
      std::vector<RationalMatrix> out;
      for (const auto& e : dg.edges()) out.emplace_back(n[e.range], n[e.source]);
      return FiniteRep(C, n, out);
    };
    CHECK(std::holds_alternative<Conformant>(shape_check(build(dims))));
    dims[C.vertex("a")] = 1;
    ShapeResult r = shape_check(build(dims));
    REQUIRE(std::holds_alternative<NonConformant>(r));
    CHECK(std::get<NonConformant>(r).vertex == C.vertex("a"));
    CHECK_THROWS_AS(shape_check(FiniteRep(fixture_graph("trio_g.graph"), {0, 0, 0},
                                          {RationalMatrix(), RationalMatrix(), RationalMatrix(), RationalMatrix()})),
                    PreconditionError);
    CHECK_THROWS_AS(FiniteRep(C, dims, {}), PreconditionError);
  }
}

TEST_SUITE("rep matrix properties") {
  TEST_CASE("single loop reps are valid exactly for inverse pairs") {
    Rng rng(51);
    auto entry = [&] { return mpq_class(uniform_signed(rng, -2, 2), static_cast<long>(uniform(rng, 1, 2))); };
    for (int trial = 0; trial < 100; ++trial) {
      Rows m{{entry(), entry()}, {entry(), entry()}};
      auto inv = oracle::inverse2(m);
      Rows ghost = inv && uniform(rng, 0, 3) != 0 ? *inv : Rows{{entry(), entry()}, {entry(), entry()}};
      bool expected = inv && ghost == *inv;
      CHECK(std::holds_alternative<CKValid>(validate_ck(loop_rep(m, ghost))) == expected);
    }
  }

  TEST_CASE("valid reps on cycles are conformant") {
    Rng rng(52);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = uniform(rng, 1, 4);
      std::vector<Edge> edges;
      for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{"c" + std::to_string(v), v, (v + 1) % n});
      Graph g("cyc", names("v", n), edges);
      std::size_t dim = uniform(rng, 0, 3);
      std::vector<RationalMatrix> ms(2 * n);
      for (Vertex v = 0; v < n; ++v) {
        RationalMatrix m = RationalMatrix::identity(dim);
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = r + 1; c < dim; ++c) m(r, c) = uniform_signed(rng, -3, 3);
        ms[n + v] = *m.inverse();
        ms[v] = m;
      }
      FiniteRep rep(g, std::vector<std::size_t>(n, dim), ms);
      REQUIRE(std::holds_alternative<CKValid>(validate_ck(rep)));
      CHECK(std::holds_alternative<Conformant>(shape_check(rep)));
      // Functoriality over the whole cycle.
      std::vector<EdgeIndex> around;
      for (Vertex v = 0; v < n; ++v) around.push_back(v);
      RationalMatrix expected = RationalMatrix::identity(dim);
      for (Vertex v = 0; v < n; ++v) expected = ms[v] * expected;
      CHECK(rep_to_module_action(rep, around) == expected);
    }
  }
}
