#include "gqw/talented.hpp"

#include <limits>
#include <vector>

#include "gqw/error.hpp"

namespace gqw {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw CapExceededError("coefficient overflow");
  return a + b;
}

std::string with_coef(std::uint64_t c, const std::string& atom) {
  return c == 1 ? atom : std::to_string(c) + atom;
}

template <typename Elem>
bool supported_on(const Elem& x, const Graph& g) {
  for (Vertex v : x.support())
    if (v >= g.num_vertices()) return false;
  return true;
}

// Search over expansions a_m, b_n with m, n <= bound.
template <typename Elem>
bool meet_within(const Elem& a, const Elem& b, const Graph& g, std::size_t bound) {
  std::vector<Elem> left{a}, right{b};
  for (std::size_t k = 1; k <= bound; ++k) {
    left.push_back(expand(left.back(), g, 1));
    right.push_back(expand(right.back(), g, 1));
  }
  for (const auto& l : left)
    for (const auto& r : right)
      if (l == r) return true;
  return false;
}

template <typename Elem>
Equality decide(const Elem& a, const Elem& b, const Graph& g, std::size_t bound) {
  if (!supported_on(a, g) || !supported_on(b, g))
    throw PreconditionError("element is not supported on the graph");
  if (is_acyclic(g)) {
    // After |E0| steps every term sits on a sink.
    std::size_t n = g.num_vertices();
    return expand(a, g, n) == expand(b, g, n) ? Equality::Equal : Equality::Distinct;
  }
  return meet_within(a, b, g, bound) ? Equality::Equal : Equality::Unknown;
}

}  // namespace

TalentedElement TalentedElement::generator(Vertex v, std::int64_t i, std::uint64_t coef) {
  TalentedElement x;
  x.add(v, i, coef);
  return x;
}

TalentedElement TalentedElement::unit(const Graph& g) {
  TalentedElement x;
  for (Vertex v = 0; v < g.num_vertices(); ++v) x.add(v, 0, 1);
  return x;
}

void TalentedElement::add(Vertex v, std::int64_t i, std::uint64_t coef) {
  if (coef == 0) return;
  auto& slot = terms_[{v, i}];
  slot = checked_add(slot, coef);
}

TalentedElement& TalentedElement::operator+=(const TalentedElement& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

TalentedElement TalentedElement::shifted(std::int64_t n) const {
  TalentedElement x;
  for (const auto& [key, c] : terms_) x.terms_.emplace(Key{key.first, key.second + n}, c);
  return x;
}

VertexSet TalentedElement::support() const {
  VertexSet out;
  for (const auto& [key, c] : terms_) out.insert(key.first);
  return out;
}

std::string TalentedElement::to_string(const Graph& g) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += with_coef(c, g.vertex_name(key.first) + "(" + std::to_string(key.second) + ")");
  }
  return out;
}

GraphMonoidElement GraphMonoidElement::generator(Vertex v, std::uint64_t coef) {
  GraphMonoidElement x;
  x.add(v, coef);
  return x;
}

void GraphMonoidElement::add(Vertex v, std::uint64_t coef) {
  if (coef == 0) return;
  auto& slot = terms_[v];
  slot = checked_add(slot, coef);
}

GraphMonoidElement& GraphMonoidElement::operator+=(const GraphMonoidElement& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  return *this;
}

VertexSet GraphMonoidElement::support() const {
  VertexSet out;
  for (const auto& [v, c] : terms_) out.insert(v);
  return out;
}

std::string GraphMonoidElement::to_string(const Graph& g) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += with_coef(c, g.vertex_name(v));
  }
  return out;
}

const char* to_string(Equality e) noexcept {
  switch (e) {
    case Equality::Equal:
      return "equal";
    case Equality::Distinct:
      return "distinct";
    case Equality::Unknown:
      return "unknown";
  }
  return "unknown";
}

TalentedElement expand(const TalentedElement& x, const Graph& g, std::size_t steps) {
  TalentedElement cur = x;
  for (std::size_t k = 0; k < steps; ++k) {
    TalentedElement next;
    for (const auto& [key, c] : cur.terms()) {
      auto [v, i] = key;
      if (g.is_sink(v)) {
        next.add(v, i, c);
        continue;
      }
      for (EdgeIndex e : g.out_edges(v)) next.add(g.edge(e).range, i + 1, c);
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

GraphMonoidElement expand(const GraphMonoidElement& x, const Graph& g, std::size_t steps) {
  GraphMonoidElement cur = x;
  for (std::size_t k = 0; k < steps; ++k) {
    GraphMonoidElement next;
    for (const auto& [v, c] : cur.terms()) {
      if (g.is_sink(v)) {
        next.add(v, c);
        continue;
      }
      for (EdgeIndex e : g.out_edges(v)) next.add(g.edge(e).range, c);
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Equality eq_bounded(const TalentedElement& a, const TalentedElement& b, const Graph& g,
                    std::size_t bound) {
  return decide(a, b, g, bound);
}

Equality graph_monoid_eq_bounded(const GraphMonoidElement& a, const GraphMonoidElement& b,
                                 const Graph& g, std::size_t bound) {
  return decide(a, b, g, bound);
}

}  // namespace gqw
