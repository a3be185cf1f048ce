// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "../src/cli/report.hpp"
#include "gqw/cli.hpp"
#include "gqw/covering.hpp"
#include "gqw/distribution.hpp"
#include "gqw/ideals.hpp"
#include "gqw/rep_matrix.hpp"
#include "gqw/talented.hpp"
#include "gqw/text_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gqw;
using namespace gqw::testing;
using Json = report::Json;

namespace {

constexpr double kSignatureSeconds = 1.0;
constexpr double kBijectionSeconds = 60.0;
constexpr std::uint64_t kEnumerationBound = 2;
constexpr Level kShiftRange = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Records the first failure and counts checks.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t checks() const { return checks_; }

 private:
  std::string failure_;
  std::size_t checks_ = 0;
};

Json run_json(std::vector<std::string> args, int* code = nullptr) {
  for (auto& a : args)
    if (!a.empty() && a[0] == '@') a = fixture_path(a.substr(1));
  std::ostringstream out, err;
  int c = run_cli(args, out, err);
  if (code) *code = c;
  if (c != 0 && c != 4) return Json();
  return Json::parse(out.str());
}

RepDatum fixture_datum(const Graph& g, const std::string& name) { return parse_datum(g, read_file(fixture_path(name))); }

std::map<std::size_t, std::size_t> length_histogram(const std::vector<oracle::EdgeCycle>& cycles) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& c : cycles) ++out[c.size()];
  return out;
}

std::set<std::set<EdgeIndex>> cycle_edge_sets(const std::vector<CycleClass>& cycles) {
  std::set<std::set<EdgeIndex>> out;
  for (const auto& c : cycles) out.insert(std::set<EdgeIndex>(c.edges.begin(), c.edges.end()));
  return out;
}

void check_bijection(Check& check, const Graph& g) {
  std::string name = serialize_graph(g);
  oracle::Raw r = oracle::raw(g);
  auto brute = oracle::hsat_subsets(r);
  HSatLattice lattice = enumerate_hsat(g);
  std::set<VertexSet> members;
  for (const auto& h : lattice.members) members.insert(h.vertices());
  check.expect(members == std::set<VertexSet>(brute.begin(), brute.end()), "lattice differs from brute force:\n" + name);

  auto cycles = oracle::maximal_cycles(r);
  check.expect(cycle_edge_sets(maximal_cycles(g)) == std::set<oracle::EdgeCycle>(cycles.begin(), cycles.end()),
               "maximal cycles differ from brute force:\n" + name);
  auto sinks = oracle::maximal_sinks(r);
  check.expect(maximal_sinks(g) == std::vector<Vertex>(sinks.begin(), sinks.end()),
               "maximal sinks differ from brute force:\n" + name);

  std::map<std::size_t, std::size_t> comets;
  std::size_t unique_sink = 0;
  for (const auto& h : lattice.members) {
    QuotientKind k = classify_quotient(g, h);
    if (auto* c = std::get_if<CometOfPeriod>(&k)) ++comets[c->period];
    if (std::holds_alternative<AcyclicUniqueSink>(k)) ++unique_sink;
  }
  check.expect(comets == length_histogram(cycles), "comet quotient counts differ:\n" + name);
  check.expect(unique_sink == sinks.size(), "unique sink quotient count differs:\n" + name);
}

// Criterion 1.
Check signature_discrimination() {
  Check check;
  auto start = Clock::now();
  const std::map<std::string, std::string> expected = {
      {"trio_e.graph", "({1,1},0)"}, {"trio_f.graph", "({1},1)"}, {"trio_g.graph", "({},2)"}};
  for (const auto& [file, text] : expected) {
    Json j = run_json({"signature", "@" + file});
    check.expect(j["result"]["signature"]["text"] == text, file + " signature");
  }
  std::vector<std::pair<std::string, std::string>> pairs = {{"trio_e.graph", "trio_f.graph"},
                                                            {"trio_e.graph", "trio_g.graph"},
                                                            {"trio_f.graph", "trio_g.graph"},
                                                            {"edge.graph", "edge_loop.graph"}};
  for (const auto& [a, b] : pairs) {
    for (const auto& [l, r] : {std::pair{a, b}, std::pair{b, a}}) {
      Json j = run_json({"compare", "@" + l, "@" + r});
      check.expect(j["result"]["verdict"] == "incompatible", "compare " + l + " " + r);
    }
  }
  for (const auto& [file, text] : expected) {
    Json j = run_json({"compare", "@" + file, "@" + file});
    check.expect(j["result"]["verdict"] == "compatible", "compare " + file + " with itself");
  }
  double elapsed = seconds_since(start);
  check.expect(elapsed < kSignatureSeconds, "took " + std::to_string(elapsed) + " s");
  return check;
}

// Criterion 2.
Check bijection() {
  Check check;
  auto start = Clock::now();
  Rng rng(1001);
  for (int trial = 0; trial < 200; ++trial) check_bijection(check, random_graph(rng, 6, 10));
  for (unsigned mask = 0; mask < 512; ++mask) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (unsigned bit = 0; bit < 9; ++bit)
      if ((mask >> bit) & 1) pairs.emplace_back(bit / 3, bit % 3);
    check_bijection(check, graph_from_pairs("K", 3, pairs));
  }
  double elapsed = seconds_since(start);
  check.expect(elapsed < kBijectionSeconds, "took " + std::to_string(elapsed) + " s");
  return check;
}

// Criterion 3.
Check worked_example() {
  Check check;
  int code = -1;
  Json j = run_json({"distribute", "@worked.graph", "--datum", "@worked.datum", "--lo", "-2"}, &code);
  check.expect(code == 0, "distribute exit code " + std::to_string(code));
  if (!check.ok()) return check;
  const Json& dist = j["result"]["distribution"];
  check.expect(dist["window"][0] == -2, "window starts at -2");
  const std::map<std::string, std::vector<std::uint64_t>> expected = {
      {"u", {4, 2, 3, 2, 3}}, {"v", {3, 4, 2, 3, 2}}, {"w", {1, 1, 1, 0, 0}}, {"x", {2, 1, 0, 1, 2}}};
  for (const auto& [v, values] : expected) {
    auto row = dist["rows"][v].get<std::vector<std::uint64_t>>();
    row.resize(values.size());
    check.expect(row == values, "row " + v);
  }
  check.expect(j["result"]["flow"]["valid"] == true, "flow");
  return check;
}

// Criterion 4.
Check periodicity() {
  Check check;
  Graph c = fixture_graph("comet4.graph");
  RepDatum datum = fixture_datum(c, "comet4.datum");
  const Level t = 1;
  const std::vector<std::uint64_t> tuple{1, 2, 3, 4};
  CycleClass cycle = maximal_cycles(c).at(0);
  check.expect(datum.threshold == std::optional<Level>{t} && datum.cycles.at(cycle) == tuple, "fixture datum");
  check.expect(c.vertex_name(cycle.vertices[0]) == "v1", "canonical rotation starts at v1");

  auto forward = oracle::forward_cycle_values(tuple, 20);
  DimDistribution d = construct_distribution(c, datum, -3);
  for (Level s = 1; s <= 21; ++s)
    for (std::size_t j = 0; j < 4; ++j) {
      std::uint64_t want = forward[s - t][j];
      check.expect(periodic_value(cycle, t, tuple, j, s) == want, "periodic_value");
      check.expect(d.value(cycle.vertices[j], s) == want, "distribution value");
    }
  check.expect(d.value(c.vertex("v1"), 3) == 3, "d((v1)_3) = 3");
  check.expect(d.value(c.vertex("v4"), 5) == 4, "d((v4)_5) = 4");
  return check;
}

// Criterion 5.
Check roundtrip() {
  Check check;
  Rng rng(1005);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_no_source_graph(rng, 8);
    RepDatum datum = random_datum(rng, g, 5);
    Level lo = effective_threshold(g, datum) - static_cast<Level>(uniform(rng, 0, 4));
    DimDistribution d = construct_distribution(g, datum, lo);
    RepDatum back = extract_datum(d);
    check.expect(back == normalize(g, datum), "extract o construct:\n" + serialize_graph(g));
    check.expect(construct_distribution(g, anchor_datum(g, back, d.threshold()), lo) == d,
                 "construct o extract:\n" + serialize_graph(g));
  }
  return check;
}

// Criterion 6.
Check off_cycle_vanishing() {
  Check check;
  Rng rng(1006);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_no_source_no_sink_graph(rng, 8);
    std::string name = serialize_graph(g);
    DimDistribution d = construct_distribution(g, random_datum(rng, g, 5), -3);
    VertexSet on;
    auto cycles = oracle::maximal_cycles(oracle::raw(g));
    for (const auto& c : cycles)
      for (Vertex v : oracle::cycle_vertices(oracle::raw(g), c)) on.insert(v);
    check.expect(on == maximal_cycle_vertices(g), "C(E) differs from brute force:\n" + name);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!on.count(v))
        for (Level i = d.lo() - 3; i <= d.hi() + 3; ++i) check.expect(d.value(v, i) == 0, "nonzero off C(E):\n" + name);

    std::uint64_t expected = 1;
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) expected *= kEnumerationBound + 1;
    DistributionSpace space = distribution_space(g);
    check.expect(space.count(kEnumerationBound) == expected, "count:\n" + name);
    if (expected > 6561) continue;
    auto data = space.enumerate(kEnumerationBound);
    check.expect(data.size() == expected, "enumeration size:\n" + name);
    if (expected > 729) continue;
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& datum : data) {
      DimDistribution e = construct_distribution(g, datum, 0);
      distinct.insert(e.values_at(e.threshold()));
    }
    check.expect(distinct.size() == expected, "enumerated data give distinct distributions:\n" + name);
  }
  Json two = run_json({"enumerate-dist", "@two_cycle.graph", "--bound", std::to_string(kEnumerationBound), "--count-only"});
  check.expect(two["result"]["count"] == 9, "enumerate-dist two_cycle");
  return check;
}

// Criterion 7.
Check ck_validation() {
  Check check;
  int code = -1;
  for (const char* rep : {"example_rho.rep", "example_sigma.rep"}) {
    Json j = run_json({"validate-rep", "@loop.graph", "--rep", std::string("@") + rep}, &code);
    check.expect(code == 0 && j["result"]["ck"]["valid"] == true, std::string(rep) + " valid");
  }
  Json bad = run_json({"validate-rep", "@loop.graph", "--rep", "@perturbed.rep"}, &code);
  check.expect(code == 4 && bad["result"]["ck"]["valid"] == false, "perturbed rep is a violation");

  Graph loop = fixture_graph("loop.graph");
  Rng rng(1007);
  auto entry = [&] { return mpq_class(uniform_signed(rng, -2, 2), static_cast<long>(uniform(rng, 1, 2))); };
  using Rows = std::vector<std::vector<mpq_class>>;
  for (int trial = 0; trial < 100; ++trial) {
    Rows m{{entry(), entry()}, {entry(), entry()}};
    auto inv = oracle::inverse2(m);
    Rows ghost = inv && uniform(rng, 0, 3) != 0 ? *inv : Rows{{entry(), entry()}, {entry(), entry()}};
    bool expected = inv && ghost == *inv;
    FiniteRep rep(loop, {2}, {RationalMatrix::from_rows(m), RationalMatrix::from_rows(ghost)});
    check.expect(std::holds_alternative<CKValid>(validate_ck(rep)) == expected, "random loop rep");
  }
  return check;
}

std::vector<DimDistribution> fixture_distributions(Rng& rng) {
  std::vector<DimDistribution> out;
  Graph w = fixture_graph("worked.graph"), c = fixture_graph("comet4.graph"), t = fixture_graph("two_cycle.graph");
  out.push_back(construct_distribution(w, fixture_datum(w, "worked.datum"), -2));
  out.push_back(construct_distribution(c, fixture_datum(c, "comet4.datum"), -3));
  out.push_back(construct_distribution(t, fixture_datum(t, "two_cycle.datum"), -2));
  for (const char* f : {"loop.graph", "rose.graph", "two_cycle_relabeled.graph", "isolated.graph"}) {
    Graph g = fixture_graph(f);
    out.push_back(construct_distribution(g, random_datum(rng, g, 5), -2));
  }
  return out;
}

// Criterion 8.
Check shift_coherence() {
  Check check;
  Rng rng(1008);
  for (const auto& d : fixture_distributions(rng))
    for (Level k = -kShiftRange; k <= kShiftRange; ++k) {
      DimDistribution s = shift_distribution(d, k);
      check.expect(shift_distribution(s, -k) == d, "shift " + std::to_string(k) + " on " + d.graph().name());
      check.expect(s.value(0, 0) == d.value(0, k), "shifted values");
    }
  for (const char* f : {"trio_e.graph", "trio_f.graph", "trio_g.graph", "edge.graph", "edge_loop.graph",
                        "worked.graph", "comet4.graph", "loop.graph", "rose.graph", "two_cycle.graph",
                        "two_cycle_relabeled.graph", "isolated.graph"}) {
    DoubleGraph dg = double_graph(fixture_graph(f));
    CoveringWindow w = covering_window(dg, -2, 3);
    for (Level k = -kShiftRange; k <= kShiftRange; ++k) {
      CoveringWindow s = shift_window(w, k);
      check.expect(shift_window(s, -k) == w, std::string("shift_window on ") + f);
      check.expect(s == covering_window(dg, -2 - k, 3 - k), std::string("shift_window matches window on ") + f);
    }
  }
  return check;
}

// Criterion 9.
Check acyclic_decidability() {
  Check check;
  Rng rng(1009);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (std::size_t bit = 0; bit < slots.size(); ++bit)
        if ((mask >> bit) & 1) pairs.push_back(slots[bit]);
      Graph g = graph_from_pairs("D", n, pairs);
      oracle::Raw r = oracle::raw(g);

      std::vector<std::pair<TalentedElement, oracle::Multiset>> elements;
      auto add = [&](std::vector<std::pair<Vertex, Level>> terms) {
        TalentedElement x;
        oracle::Multiset m;
        for (auto [v, i] : terms) {
          x += TalentedElement::generator(v, i);
          ++m[{v, i}];
        }
        elements.emplace_back(x, m);
      };
      for (Vertex v = 0; v < n; ++v) {
        add({{v, 0}});
        add({{v, 1}});
      }
      for (int extra = 0; extra < 4; ++extra)
        add({{uniform(rng, 0, n - 1), uniform_signed(rng, 0, 2)}, {uniform(rng, 0, n - 1), uniform_signed(rng, 0, 2)}});

      std::vector<std::set<oracle::Multiset>> closures;
      for (const auto& [x, m] : elements) closures.push_back(oracle::rewrite_closure(r, m));
      for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = a; b < elements.size(); ++b) {
          Equality eq = eq_bounded(elements[a].first, elements[b].first, g);
          check.expect(eq != Equality::Unknown, "Unknown on\n" + serialize_graph(g));
          bool meet = std::any_of(closures[a].begin(), closures[a].end(),
                                  [&](const oracle::Multiset& x) { return closures[b].count(x) > 0; });
          check.expect((eq == Equality::Equal) == meet, "disagrees with closure oracle on\n" + serialize_graph(g));
        }
    }
  }
  return check;
}

void check_transfer(Check& check, const DimDistribution& d, const Graph& target) {
  std::string name = d.graph().name() + " -> " + target.name();
  check.expect(std::holds_alternative<Matching>(candidate_check(d.graph(), target)), "signatures compatible " + name);
  TransferResult there = transfer(d, target);
  check.expect(std::holds_alternative<FlowValid>(validate_flow(there.distribution)), "flow on target " + name);
  TransferResult back = transfer(there.distribution, d.graph());
  check.expect(back.distribution == d, "round trip " + name);
  check.expect(extract_datum(back.distribution) == extract_datum(d), "round trip data " + name);
}

// Criterion 10.
Check transfer_roundtrip() {
  Check check;
  Rng rng(1010);
  std::vector<std::pair<Graph, RepDatum>> sources;
  Graph w = fixture_graph("worked.graph"), c = fixture_graph("comet4.graph"), t = fixture_graph("two_cycle.graph");
  RepDatum wd = fixture_datum(w, "worked.datum");
  wd.sinks.clear();
  wd.threshold.reset();
  sources.emplace_back(w, wd);
  sources.emplace_back(c, fixture_datum(c, "comet4.datum"));
  sources.emplace_back(t, fixture_datum(t, "two_cycle.datum"));
  for (const char* f : {"loop.graph", "rose.graph", "two_cycle_relabeled.graph", "isolated.graph"}) {
    Graph g = fixture_graph(f);
    sources.emplace_back(g, random_datum(rng, g, 5, true));
  }
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_no_source_graph(rng, 7);
    sources.emplace_back(g, random_datum(rng, g, 5, true));
  }
  for (const auto& [g, datum] : sources) {
    Graph a = relabel(rng, g).graph, b = relabel(rng, g).graph;
    DimDistribution d = construct_distribution(g, datum, -2);
    check_transfer(check, d, a);
    check_transfer(check, transfer(d, a).distribution, b);
  }
  return check;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"signature discrimination", signature_discrimination},
      {"hereditary saturated bijection", bijection},
      {"worked example table", worked_example},
      {"periodicity oracle", periodicity},
      {"datum roundtrip", roundtrip},
      {"off-cycle vanishing and enumeration", off_cycle_vanishing},
      {"CK matrix validation", ck_validation},
      {"shift coherence", shift_coherence},
      {"acyclic decidability", acyclic_decidability},
      {"transfer roundtrip", transfer_roundtrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Check check;
    try {
      check = criteria[i].second();
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %2zu %s (%zu checks, %.2f s)\n", check.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first,
                check.checks(), seconds_since(start));
    if (!check.ok()) {
      std::printf("     %s\n", check.failure().c_str());
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
