#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "gqw/cli.hpp"
#include "gqw/error.hpp"
#include "gqw/text_io.hpp"
#include "report.hpp"

namespace gqw {

namespace {

using report::Json;

// What a subcommand produces: a JSON result, or raw text (DOT, table files).
struct Output {
  Json json;
  std::optional<std::string> text = std::nullopt;
  int code = 0;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Json csp_size_json(const Graph& g, Vertex v) {
  auto n = csp_size(g, v);
  if (!n) return "infinite";
  return *n;
}

Output analyze(const std::string& file, bool dot) {
  Graph g = load_graph(file);
  if (dot) return {{}, to_dot(double_graph(g)), 0};
  auto classes = vertex_classes(g);
  Json cycles = Json::array(), maximal = Json::array();
  for (const auto& c : enumerate_cycles(g)) cycles.push_back(report::cycle(g, c));
  for (const auto& c : maximal_cycles(g)) maximal.push_back(report::cycle(g, c));
  Json csp = Json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v) csp[g.vertex_name(v)] = csp_size_json(g, v);
  Json result{{"graph", g.name()},
              {"classes",
               {{"sinks", report::vertex_list(g, classes.sinks)},
                {"sources", report::vertex_list(g, classes.sources)},
                {"isolated", report::vertex_list(g, classes.isolated)},
                {"regular", report::vertex_list(g, classes.regular)}}},
              {"cycles", cycles},
              {"maximal_cycles", maximal},
              {"maximal_sinks", report::vertex_list(g, maximal_sinks(g))},
              {"cycle_vertices", report::vertex_list(g, maximal_cycle_vertices(g))},
              {"csp_size", csp},
              {"csp_gt1", report::vertex_list(g, csp_gt1(g))}};
  return {result};
}

Output signature_cmd(const std::string& file) {
  Graph g = load_graph(file);
  return {Json{{"graph", g.name()}, {"signature", report::signature(signature(g))}}};
}

Output compare(const std::string& f1, const std::string& f2) {
  Graph g1 = load_graph(f1), g2 = load_graph(f2);
  Json result{{"left", {{"graph", g1.name()}, {"signature", report::signature(signature(g1))}}},
              {"right", {{"graph", g2.name()}, {"signature", report::signature(signature(g2))}}}};
  Json verdict = report::candidate(g1, g2, candidate_check(g1, g2));
  for (auto& [k, v] : verdict.items()) result[k] = v;
  return {result};
}

std::size_t hsat_cap() {
  const char* env = std::getenv("GQW_MAX_VERTICES");
  if (!env || !*env) return kDefaultHSatVertexCap;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 9)
    throw PreconditionError("GQW_MAX_VERTICES must be a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

Output ideals(const std::string& file) {
  Graph g = load_graph(file);
  auto lattice = enumerate_hsat(g, hsat_cap());
  return {Json{{"graph", g.name()}, {"lattice", report::lattice(g, lattice)}, {"talmax", report::talmax(g, talmax(g))}}};
}

Output cover(const std::string& file, Level lo, Level hi, bool dot) {
  Graph g = load_graph(file);
  DoubleGraph dg = double_graph(g);
  CoveringWindow w = covering_window(dg, lo, hi);
  if (dot) return {{}, to_dot(dg, w), 0};
  CKRelationSet rel = ck_relations(dg);
  Json relations = Json::array();
  for (const auto& r : rel.relations) relations.push_back(relation_to_string(dg, r));
  return {Json{{"graph", g.name()},
               {"window", report::window(dg, w)},
               {"relations", relations},
               {"lifted", report::lifted(dg, rel, lift_relations(dg, rel, lo, hi))}}};
}

Output distribution_output(const DimDistribution& d, const std::string& format, Json extra = Json::object()) {
  FlowResult flow = validate_flow(d);
  int code = std::holds_alternative<FlowValid>(flow) ? 0 : exit_code(ErrorKind::Violation);
  if (format == "text") return {{}, serialize_distribution(d), code};
  Json result{{"graph", d.graph().name()}};
  for (auto& [k, v] : extra.items()) result[k] = v;
  result["distribution"] = report::distribution(d);
  result["flow"] = report::flow(d.graph(), flow);
  return {result, std::nullopt, code};
}

Output distribute(const std::string& file, const std::string& datum_file, Level lo, const std::string& format) {
  Graph g = load_graph(file);
  RepDatum datum = parse_datum(g, read_file(datum_file));
  return distribution_output(construct_distribution(g, datum, lo), format,
                             Json{{"datum", report::datum(g, normalize(g, datum))}});
}

Output extract(const std::string& file, const std::string& dist_file, const std::string& format) {
  Graph g = load_graph(file);
  DimDistribution d = parse_distribution(g, read_file(dist_file));
  RepDatum datum = extract_datum(d);
  if (format == "text") return {{}, serialize_datum(g, datum), 0};
  return {Json{{"graph", g.name()}, {"datum", report::datum(g, datum)}}};
}

Output shift(const std::string& file, const std::string& dist_file, Level k, const std::string& format) {
  Graph g = load_graph(file);
  DimDistribution d = parse_distribution(g, read_file(dist_file));
  return distribution_output(shift_distribution(d, k), format, Json{{"k", k}});
}

Output transfer_cmd(const std::string& f1, const std::string& f2, const std::string& datum_file,
                    const std::string& dist_file, std::optional<Level> lo, const std::string& format) {
  Graph g1 = load_graph(f1), g2 = load_graph(f2);
  std::optional<DimDistribution> source;
  if (!dist_file.empty()) {
    source = parse_distribution(g1, read_file(dist_file));
  } else {
    RepDatum datum = parse_datum(g1, read_file(datum_file));
    source = construct_distribution(g1, datum, lo.value_or(effective_threshold(g1, datum)));
  }
  TransferResult t = transfer(*source, g2);
  return distribution_output(t.distribution, format,
                             Json{{"source", g1.name()}, {"variant", t.variant}, {"datum", report::datum(g2, t.datum)}});
}

Output validate_rep(const std::string& file, const std::string& rep_file) {
  Graph g = load_graph(file);
  FiniteRep rep = parse_rep(g, read_file(rep_file));
  CKResult ck = validate_ck(rep);
  Json shape = nullptr;
  if (g.sources_are_isolated()) shape = report::shape(g, shape_check(rep));
  Json dims = Json::object();
  auto dv = dim_vector(rep);
  for (Vertex v = 0; v < g.num_vertices(); ++v) dims[g.vertex_name(v)] = dv[v];
  int code = std::holds_alternative<CKValid>(ck) ? 0 : exit_code(ErrorKind::Violation);
  return {Json{{"graph", g.name()}, {"dims", dims}, {"ck", report::ck(ck)}, {"shape", shape}}, std::nullopt, code};
}

Output enumerate_dist(const std::string& file, std::uint64_t bound, bool count_only) {
  Graph g = load_graph(file);
  DistributionSpace space = distribution_space(g);
  Json cycles = Json::array();
  for (const auto& c : space.cycles) cycles.push_back(c.id(g));
  Json result{{"graph", g.name()},
              {"bound", bound},
              {"cycles", cycles},
              {"arities", space.arities()},
              {"count", space.count(bound)}};
  if (!count_only) {
    Json data = Json::array();
    for (const auto& datum : space.enumerate(bound)) {
      Json tuples = Json::array();
      for (const auto& c : space.cycles) tuples.push_back(datum.cycles.at(c));
      data.push_back(tuples);
    }
    result["data"] = data;
  }
  return {result};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded invariants of finite directed graphs", "gqw"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string file, file2, datum_file, dist_file, rep_file, format = "json";
  Level lo = 0, hi = 0, k = 0;
  std::optional<Level> transfer_lo;
  std::uint64_t bound = 0;
  bool dot = false, count_only = false;
  std::function<Output()> action;

  auto formats = CLI::IsMember({"json", "text"});

  auto* a = app.add_subcommand("analyze", "Vertex classes, cycles, maximal cycles and sinks, CSP sizes");
  a->add_option("file", file, "Graph file")->required();
  a->add_flag("--dot", dot, "Print the double graph as DOT");
  a->callback([&] { action = [&] { return analyze(file, dot); }; });

  auto* s = app.add_subcommand("signature", "Maximal cycle lengths and maximal sink count");
  s->add_option("file", file, "Graph file")->required();
  s->callback([&] { action = [&] { return signature_cmd(file); }; });

  auto* c = app.add_subcommand("compare", "Candidate check between two graphs");
  c->add_option("file1", file, "First graph")->required();
  c->add_option("file2", file2, "Second graph")->required();
  c->callback([&] { action = [&] { return compare(file, file2); }; });

  auto* i = app.add_subcommand("ideals", "Hereditary saturated lattice and quotient kinds");
  i->add_option("file", file, "Graph file")->required();
  i->callback([&] { action = [&] { return ideals(file); }; });

  auto* cv = app.add_subcommand("cover", "Covering window and lifted relations");
  cv->add_option("file", file, "Graph file")->required();
  cv->add_option("--lo", lo, "Lowest level")->required();
  cv->add_option("--hi", hi, "Highest level")->required();
  cv->add_flag("--dot", dot, "Print the window as DOT");
  cv->callback([&] { action = [&] { return cover(file, lo, hi, dot); }; });

  auto* d = app.add_subcommand("distribute", "Build a dimension distribution from a datum");
  d->add_option("file", file, "Graph file")->required();
  d->add_option("--datum", datum_file, "Datum file")->required();
  d->add_option("--lo", lo, "Lowest window level")->required();
  d->add_option("--format", format, "json or text")->check(formats);
  d->callback([&] { action = [&] { return distribute(file, datum_file, lo, format); }; });

  auto* e = app.add_subcommand("extract", "Recover the datum of a distribution table");
  e->add_option("file", file, "Graph file")->required();
  e->add_option("--dist", dist_file, "Distribution file")->required();
  e->add_option("--format", format, "json or text")->check(formats);
  e->callback([&] { action = [&] { return extract(file, dist_file, format); }; });

  auto* sh = app.add_subcommand("shift", "Shift a distribution by k levels");
  sh->add_option("file", file, "Graph file")->required();
  sh->add_option("--dist", dist_file, "Distribution file")->required();
  sh->add_option("--k", k, "Shift amount")->required();
  sh->add_option("--format", format, "json or text")->check(formats);
  sh->callback([&] { action = [&] { return shift(file, dist_file, k, format); }; });

  auto* t = app.add_subcommand("transfer", "Move a distribution to a graph with a compatible signature");
  t->add_option("file1", file, "Source graph")->required();
  t->add_option("file2", file2, "Target graph")->required();
  auto* td = t->add_option("--datum", datum_file, "Datum file over the source graph");
  auto* tt = t->add_option("--dist", dist_file, "Distribution file over the source graph");
  td->excludes(tt);
  t->add_option("--lo", transfer_lo, "Lowest window level when building from a datum");
  t->add_option("--format", format, "json or text")->check(formats);
  t->callback([&] {
    if (datum_file.empty() && dist_file.empty()) throw CLI::RequiredError("--datum or --dist");
    action = [&] { return transfer_cmd(file, file2, datum_file, dist_file, transfer_lo, format); };
  });

  auto* v = app.add_subcommand("validate-rep", "Check a matrix representation against the relations");
  v->add_option("file", file, "Graph file")->required();
  v->add_option("--rep", rep_file, "Representation file")->required();
  v->callback([&] { action = [&] { return validate_rep(file, rep_file); }; });

  auto* n = app.add_subcommand("enumerate-dist", "Enumerate distributions with entries up to a bound");
  n->add_option("file", file, "Graph file")->required();
  n->add_option("--bound", bound, "Largest tuple entry")->required();
  n->add_flag("--count-only", count_only, "Omit the list of data");
  n->callback([&] { action = [&] { return enumerate_dist(file, bound, count_only); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& ok) {
    return app.exit(ok, out, err);
  } catch (const CLI::ParseError& bad) {
    err << "error: " << to_string(ErrorKind::Parse) << ": " << bad.what() << "\n";
    return exit_code(ErrorKind::Parse);
  }

  try {
    Output o = action();
    if (o.text) {
      out << *o.text;
      if (!o.text->empty() && o.text->back() != '\n') out << "\n";
    } else {
      std::string name = app.get_subcommands().front()->get_name();
      out << report::envelope(name, args, std::move(o.json)).dump(2) << "\n";
    }
    return o.code;
  } catch (const Error& bad) {
    err << "error: " << to_string(bad.kind()) << ": " << bad.what() << "\n";
    return exit_code(bad.kind());
  }
}

}  // namespace gqw
