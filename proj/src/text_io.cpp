#include "gqw/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "gqw/error.hpp"

namespace gqw {

namespace {

struct Line {
  std::string text;  // comment stripped
  std::size_t number = 0;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (!blank) out.push_back(Line{line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    throw ParseError(what, line_.number, pos + 1);
  }

  void skip_ws() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  std::size_t pos() const noexcept { return pos_; }

  bool consume(const std::string& s) {
    skip_ws();
    if (line_.text.compare(pos_, s.size(), s) != 0) return false;
    pos_ += s.size();
    return true;
  }
  void expect(const std::string& s) {
    if (!consume(s)) fail("expected '" + s + "'");
  }
  // Keyword followed by whitespace, ':' or end of line.
  bool keyword(const std::string& kw) {
    skip_ws();
    std::size_t save = pos_;
    if (!consume(kw)) return false;
    if (pos_ < line_.text.size() && ident_char(line_.text[pos_])) {
      pos_ = save;
      return false;
    }
    return true;
  }
  std::string ident(const char* what = "identifier") {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && ident_char(line_.text[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return line_.text.substr(start, pos_ - start);
  }
  // Run of characters up to whitespace or one of `stops`.
  std::string word(const std::string& stops = "") {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && !std::isspace(static_cast<unsigned char>(line_.text[pos_])) &&
           stops.find(line_.text[pos_]) == std::string::npos)
      ++pos_;
    if (start == pos_) fail("expected a value");
    return line_.text.substr(start, pos_ - start);
  }
  std::string rest() {
    skip_ws();
    std::string r = line_.text.substr(pos_);
    pos_ = line_.text.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  const Line& line() const noexcept { return line_; }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

template <typename T>
T to_number(const std::string& s, const Cursor& cur, std::size_t pos, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) cur.fail_at(std::string("expected ") + what, pos);
  return value;
}

struct Item {
  std::string key;
  std::string value;
  std::size_t key_pos = 0;
  std::size_t value_pos = 0;
};

// key=value items separated by commas or whitespace; commas inside
// parentheses or brackets belong to the value.
std::vector<Item> items(Cursor& cur) {
  std::vector<Item> out;
  const std::string& t = cur.line().text;
  std::size_t i = cur.pos();
  while (true) {
    while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
    if (i >= t.size()) break;
    Item item;
    item.key_pos = i;
    while (i < t.size() && t[i] != '=' && !std::isspace(static_cast<unsigned char>(t[i])) && t[i] != ',') ++i;
    item.key = t.substr(item.key_pos, i - item.key_pos);
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i >= t.size() || t[i] != '=') cur.fail_at("expected '=' after " + item.key, i);
    ++i;
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    item.value_pos = i;
    int depth = 0;
    while (i < t.size()) {
      char c = t[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth == 0 && (c == ',' || std::isspace(static_cast<unsigned char>(c)))) break;
      ++i;
    }
    item.value = t.substr(item.value_pos, i - item.value_pos);
    if (item.key.empty()) cur.fail_at("expected a key", item.key_pos);
    if (item.value.empty()) cur.fail_at("expected a value for " + item.key, item.value_pos);
    out.push_back(std::move(item));
  }
  return out;
}

struct LevelMapBuilder {
  Rule rule = ZeroRule{};
  std::map<Level, std::uint64_t> table;
  std::optional<Level> vanish;

  // Returns false if the key is not a level-map key.
  bool take(const Item& it, const Cursor& cur) {
    if (it.key == "threshold") {
      vanish = to_number<Level>(it.value, cur, it.value_pos, "an integer threshold");
    } else if (it.key == "default") {
      try {
        rule = parse_rule(it.value);
      } catch (const PreconditionError& e) {
        cur.fail_at(e.what(), it.value_pos);
      }
    } else if (!it.key.empty() && (std::isdigit(static_cast<unsigned char>(it.key[0])) || it.key[0] == '-')) {
      Level i = to_number<Level>(it.key, cur, it.key_pos, "an integer level");
      if (table.count(i)) cur.fail_at("duplicate level " + it.key, it.key_pos);
      table[i] = to_number<std::uint64_t>(it.value, cur, it.value_pos, "a natural number");
    } else {
      return false;
    }
    return true;
  }
  LevelMap build() const { return LevelMap::make(rule, table, vanish); }
};

Vertex lookup_vertex(const Graph& g, const std::string& name, const Cursor& cur, std::size_t pos) {
  auto v = g.find_vertex(name);
  if (!v) cur.fail_at("unknown vertex " + name, pos);
  return *v;
}

std::vector<std::uint64_t> parse_tuple(const Item& it, const Cursor& cur) {
  const std::string& s = it.value;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') cur.fail_at("expected a tuple (k1,...,kn)", it.value_pos);
  std::vector<std::uint64_t> out;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    std::string part = body.substr(start, comma - start);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.erase(part.begin());
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.pop_back();
    out.push_back(to_number<std::uint64_t>(part, cur, it.value_pos + 1 + start, "a natural number"));
    start = comma + 1;
    if (comma == body.size()) break;
  }
  return out;
}

CycleClass resolve_cycle(const Graph& g, const std::string& id, const Cursor& cur, std::size_t pos) {
  std::vector<EdgeIndex> edges;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = id.find('.', start);
    std::string part = id.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto e = g.find_edge(part);
    if (!e) cur.fail_at("unknown edge " + part, pos + start);
    edges.push_back(*e);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  CycleClass c;
  try {
    c = canonical_cycle(g, edges);
  } catch (const PreconditionError& e) {
    cur.fail_at(std::string("not a cycle: ") + e.what(), pos);
  }
  if (c.edges != edges) cur.fail_at("cycle must be written in its canonical rotation " + c.id(g), pos);
  return c;
}

std::string join_tuple(const std::vector<std::uint64_t>& k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out + ")";
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::string name;
  std::vector<std::string> vertices;
  std::set<std::string> seen_vertices, seen_edges;
  std::vector<EdgeSpec> edges;
  bool in_edges = false;
  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    if (!in_edges && cur.keyword("graph")) {
      if (!name.empty()) cur.fail("graph name given twice");
      name = cur.ident("graph name");
      cur.expect_end();
    } else if (!in_edges && cur.keyword("vertices")) {
      cur.expect(":");
      while (!cur.at_end()) {
        std::size_t pos = (cur.skip_ws(), cur.pos());
        std::string v = cur.ident("vertex name");
        if (!seen_vertices.insert(v).second) cur.fail_at("duplicate vertex " + v, pos);
        vertices.push_back(v);
      }
    } else if (!in_edges && cur.keyword("edges")) {
      cur.expect(":");
      cur.expect_end();
      in_edges = true;
    } else if (in_edges) {
      std::size_t id_pos = (cur.skip_ws(), cur.pos());
      std::string id = cur.ident("edge id");
      if (!seen_edges.insert(id).second) cur.fail_at("duplicate edge " + id, id_pos);
      cur.expect(":");
      std::size_t src_pos = (cur.skip_ws(), cur.pos());
      std::string src = cur.ident("source vertex");
      cur.expect("->");
      std::size_t dst_pos = (cur.skip_ws(), cur.pos());
      std::string dst = cur.ident("range vertex");
      cur.expect_end();
      if (!seen_vertices.count(src)) cur.fail_at("unknown vertex " + src, src_pos);
      if (!seen_vertices.count(dst)) cur.fail_at("unknown vertex " + dst, dst_pos);
      edges.push_back(EdgeSpec{id, src, dst});
    } else {
      cur.fail("expected 'graph', 'vertices:' or 'edges:'");
    }
  }
  return Graph(std::move(name), std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  if (!g.name().empty()) os << "graph " << g.name() << "\n";
  os << "vertices:";
  for (const auto& v : g.vertex_names()) os << ' ' << v;
  os << "\nedges:\n";
  for (const Edge& e : g.edges())
    os << "  " << e.id << ": " << g.vertex_name(e.source) << " -> " << g.vertex_name(e.range) << "\n";
  return os.str();
}

RepDatum parse_datum(const Graph& g, const std::string& text) {
  RepDatum out;
  enum class Kind { None, Isolated, Sink, Cycle } kind = Kind::None;
  Vertex vertex = 0;
  CycleClass cycle;
  std::optional<std::vector<std::uint64_t>> tuple;
  LevelMapBuilder builder;
  std::size_t header_line = 0;
  std::set<std::string> sections;

  auto flush = [&]() {
    switch (kind) {
      case Kind::Isolated:
        out.isolated[vertex] = builder.build();
        break;
      case Kind::Sink:
        out.sinks[vertex] = builder.build();
        break;
      case Kind::Cycle:
        if (!tuple) throw ParseError("cycle section without tuple", header_line, 1);
        out.cycles[cycle] = *tuple;
        break;
      case Kind::None:
        break;
    }
    builder = LevelMapBuilder{};
    tuple.reset();
  };

  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    if (cur.consume("[")) {
      flush();
      header_line = line.number;
      std::size_t kind_pos = (cur.skip_ws(), cur.pos());
      std::string k = cur.ident("section kind");
      std::size_t name_pos = (cur.skip_ws(), cur.pos());
      std::string name = cur.word("]");
      cur.expect("]");
      if (!sections.insert(k + " " + name).second) cur.fail_at("duplicate section", kind_pos);
      if (k == "isolated" || k == "sink") {
        kind = k == "sink" ? Kind::Sink : Kind::Isolated;
        vertex = lookup_vertex(g, name, cur, name_pos);
      } else if (k == "cycle") {
        kind = Kind::Cycle;
        cycle = resolve_cycle(g, name, cur, name_pos);
      } else {
        cur.fail_at("unknown section kind " + k, kind_pos);
      }
    }
    for (const Item& it : items(cur)) {
      if (kind == Kind::None) {
        if (it.key != "threshold") cur.fail_at("unexpected key " + it.key + " outside a section", it.key_pos);
        out.threshold = to_number<Level>(it.value, cur, it.value_pos, "an integer threshold");
      } else if (kind == Kind::Cycle) {
        if (it.key != "tuple") cur.fail_at("unexpected key " + it.key + " in cycle section", it.key_pos);
        tuple = parse_tuple(it, cur);
      } else if (!builder.take(it, cur)) {
        cur.fail_at("unexpected key " + it.key, it.key_pos);
      }
    }
  }
  flush();
  validate_datum(g, out);
  return out;
}

std::string serialize_level_map(const LevelMap& m) {
  std::string out;
  if (m.vanish_from()) out += "threshold=" + std::to_string(*m.vanish_from()) + " ";
  out += "default=" + to_string(m.rule());
  for (const auto& [i, v] : m.table()) out += " " + std::to_string(i) + "=" + std::to_string(v);
  return out;
}

std::string serialize_datum(const Graph& g, const RepDatum& datum) {
  std::ostringstream os;
  if (datum.threshold) os << "threshold=" << *datum.threshold << "\n";
  for (const auto& [v, m] : datum.isolated)
    os << "[isolated " << g.vertex_name(v) << "]\n" << serialize_level_map(m) << "\n";
  for (const auto& [w, m] : datum.sinks) os << "[sink " << g.vertex_name(w) << "]\n" << serialize_level_map(m) << "\n";
  for (const auto& [c, k] : datum.cycles) os << "[cycle " << c.id(g) << "]\ntuple=" << join_tuple(k) << "\n";
  return os.str();
}

DimDistribution parse_distribution(const Graph& g, const std::string& text) {
  std::optional<Level> lo, hi, t;
  std::map<Vertex, LevelMap> sinks, isolated;
  std::vector<std::vector<std::optional<std::uint64_t>>> cells;
  bool in_rows = false;
  std::size_t last_line = 0;

  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    last_line = line.number;
    if (in_rows) {
      std::size_t vpos = (cur.skip_ws(), cur.pos());
      std::string name = cur.ident("vertex name");
      Vertex v = lookup_vertex(g, name, cur, vpos);
      cur.expect(",");
      std::size_t lpos = (cur.skip_ws(), cur.pos());
      Level level = to_number<Level>(cur.word(","), cur, lpos, "an integer level");
      cur.expect(",");
      std::size_t xpos = (cur.skip_ws(), cur.pos());
      std::uint64_t value = to_number<std::uint64_t>(cur.word(), cur, xpos, "a natural number");
      cur.expect_end();
      if (level < *lo || level > *hi) cur.fail_at("level outside the window", lpos);
      auto& slot = cells[v][static_cast<std::size_t>(level - *lo)];
      if (slot) cur.fail_at("duplicate row for " + name + " at level " + std::to_string(level), vpos);
      slot = value;
      continue;
    }
    if (cur.keyword("distribution")) {
      std::size_t pos = (cur.skip_ws(), cur.pos());
      std::string name = cur.ident("graph name");
      cur.expect_end();
      if (name != g.name()) cur.fail_at("distribution is for graph " + name + ", not " + g.name(), pos);
    } else if (cur.keyword("window")) {
      std::size_t p1 = (cur.skip_ws(), cur.pos());
      lo = to_number<Level>(cur.word(), cur, p1, "an integer bound");
      std::size_t p2 = (cur.skip_ws(), cur.pos());
      hi = to_number<Level>(cur.word(), cur, p2, "an integer bound");
      cur.expect_end();
      if (*lo > *hi) cur.fail_at("window lower bound exceeds upper bound", p1);
    } else if (cur.keyword("threshold")) {
      std::size_t p = (cur.skip_ws(), cur.pos());
      t = to_number<Level>(cur.word(), cur, p, "an integer threshold");
      cur.expect_end();
    } else if (cur.keyword("tail")) {
      std::size_t kpos = (cur.skip_ws(), cur.pos());
      std::string kind = cur.ident("tail kind");
      std::size_t vpos = (cur.skip_ws(), cur.pos());
      Vertex v = lookup_vertex(g, cur.ident("vertex name"), cur, vpos);
      LevelMapBuilder b;
      for (const Item& it : items(cur))
        if (!b.take(it, cur)) cur.fail_at("unexpected key " + it.key, it.key_pos);
      if (kind != "sink" && kind != "isolated") cur.fail_at("unknown tail kind " + kind, kpos);
      auto& target = kind == "sink" ? sinks : isolated;
      if (!target.emplace(v, b.build()).second) cur.fail_at("duplicate tail", vpos);
    } else if (cur.keyword("rows")) {
      cur.expect_end();
      if (!lo || !hi || !t) cur.fail("window and threshold must precede rows");
      cells.assign(g.num_vertices(),
                   std::vector<std::optional<std::uint64_t>>(static_cast<std::size_t>(*hi - *lo + 1)));
      in_rows = true;
    } else {
      cur.fail("expected 'distribution', 'window', 'threshold', 'tail' or 'rows'");
    }
  }
  if (!in_rows) throw ParseError("missing rows section", last_line, 1);
  std::vector<std::vector<std::uint64_t>> rows(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t k = 0; k < cells[v].size(); ++k) {
      if (!cells[v][k])
        throw ParseError("missing row for " + g.vertex_name(v) + " at level " + std::to_string(*lo + static_cast<Level>(k)),
                         last_line, 1);
      rows[v].push_back(*cells[v][k]);
    }
  }
  return DimDistribution(g, *lo, *hi, *t, std::move(rows), std::move(sinks), std::move(isolated));
}

std::string serialize_distribution(const DimDistribution& d) {
  const Graph& g = d.graph();
  std::ostringstream os;
  os << "distribution " << g.name() << "\n";
  os << "window " << d.lo() << " " << d.hi() << "\n";
  os << "threshold " << d.threshold() << "\n";
  for (const auto& [w, m] : d.sink_tails()) os << "tail sink " << g.vertex_name(w) << " " << serialize_level_map(m) << "\n";
  for (const auto& [v, m] : d.isolated_tails())
    os << "tail isolated " << g.vertex_name(v) << " " << serialize_level_map(m) << "\n";
  os << "rows\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Level i = d.lo(); i <= d.hi(); ++i) os << g.vertex_name(v) << "," << i << "," << d.value(v, i) << "\n";
  return os.str();
}

namespace {

mpq_class parse_rational(const std::string& s, const Cursor& cur, std::size_t pos) {
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& x, bool allow_sign) {
    std::size_t i = allow_sign && !x.empty() && x[0] == '-' ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false)) cur.fail_at("expected a rational p/q", pos);
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) cur.fail_at("zero denominator", pos);
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

RationalMatrix parse_matrix(const std::string& s, const Cursor& cur, std::size_t pos) {
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= s.size() || s[i] != c) cur.fail_at(std::string("expected '") + c + "' in matrix", pos + i);
    ++i;
  };
  std::vector<std::vector<mpq_class>> rows;
  expect('[');
  skip();
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      std::vector<mpq_class> row;
      while (true) {
        skip();
        std::size_t start = i;
        while (i < s.size() && s[i] != ',' && s[i] != ']' && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        row.push_back(parse_rational(s.substr(start, i - start), cur, pos + start));
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        expect(']');
        break;
      }
      rows.push_back(std::move(row));
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (i != s.size()) cur.fail_at("unexpected input after matrix", pos + i);
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const PreconditionError& e) {
    cur.fail_at(e.what(), pos);
  }
}

}  // namespace

FiniteRep parse_rep(const Graph& g, const std::string& text) {
  DoubleGraph dg(g);
  std::vector<std::size_t> dims(g.num_vertices(), 0);
  std::vector<std::optional<RationalMatrix>> matrices(dg.num_edges());
  std::vector<char> dim_seen(g.num_vertices(), 0);
  std::size_t last_line = 0;
  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    last_line = line.number;
    if (cur.keyword("dim")) {
      std::size_t vpos = (cur.skip_ws(), cur.pos());
      Vertex v = lookup_vertex(g, cur.ident("vertex name"), cur, vpos);
      cur.expect("=");
      std::size_t npos = (cur.skip_ws(), cur.pos());
      if (dim_seen[v]) cur.fail_at("duplicate dimension", vpos);
      dim_seen[v] = 1;
      dims[v] = to_number<std::size_t>(cur.word(), cur, npos, "a natural number");
      cur.expect_end();
    } else if (cur.keyword("matrix")) {
      std::size_t epos = (cur.skip_ws(), cur.pos());
      std::string id = cur.ident("edge id");
      if (cur.consume("*")) id += "*";
      EdgeIndex e;
      try {
        e = dg.find(id);
      } catch (const PreconditionError&) {
        cur.fail_at("unknown edge " + id, epos);
      }
      if (matrices[e]) cur.fail_at("duplicate matrix " + id, epos);
      cur.expect("=");
      std::size_t mpos = (cur.skip_ws(), cur.pos());
      matrices[e] = parse_matrix(cur.rest(), cur, mpos);
    } else {
      cur.fail("expected 'dim' or 'matrix'");
    }
  }
  std::vector<RationalMatrix> out;
  for (EdgeIndex e = 0; e < dg.num_edges(); ++e) {
    const DoubleEdge& d = dg.edge(e);
    std::size_t r = dims[d.range], c = dims[d.source];
    if (matrices[e]) {
      out.push_back(*matrices[e]);
    } else if (r == 0 || c == 0) {
      out.emplace_back(r, c);
    } else {
      throw ParseError("missing matrix " + d.id, last_line, 1);
    }
  }
  return FiniteRep(g, std::move(dims), std::move(out));
}

std::string serialize_rep(const FiniteRep& rep) {
  const Graph& g = rep.graph();
  const DoubleGraph& dg = rep.double_graph();
  std::ostringstream os;
  for (Vertex v = 0; v < g.num_vertices(); ++v) os << "dim " << g.vertex_name(v) << " = " << rep.dims()[v] << "\n";
  for (EdgeIndex e = 0; e < dg.num_edges(); ++e) {
    const RationalMatrix& m = rep.matrix(e);
    if (m.rows() == 0 || m.cols() == 0) continue;
    os << "matrix " << dg.edge(e).id << " = " << m.to_string() << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gqw
