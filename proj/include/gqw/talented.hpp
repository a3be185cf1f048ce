#pragma once

// Elements of the talented monoid T_E and the graph monoid M_E.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "gqw/graph.hpp"

namespace gqw {

/// A finite N-combination of generators v(i). Zero coefficients are never
/// stored, so structural equality is equality of associations.
class TalentedElement {
 public:
  using Key = std::pair<Vertex, std::int64_t>;

  TalentedElement() = default;
  static TalentedElement generator(Vertex v, std::int64_t i, std::uint64_t coef = 1);
  // 1_E = sum of v(0) over all vertices.
  static TalentedElement unit(const Graph& g);

  void add(Vertex v, std::int64_t i, std::uint64_t coef);
  TalentedElement& operator+=(const TalentedElement& other);
  friend TalentedElement operator+(TalentedElement a, const TalentedElement& b) { return a += b; }

  // The Z-action: every index moves by n.
  TalentedElement shifted(std::int64_t n) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Key, std::uint64_t>& terms() const noexcept { return terms_; }
  VertexSet support() const;
  std::string to_string(const Graph& g) const;

  friend bool operator==(const TalentedElement&, const TalentedElement&) = default;

 private:
  std::map<Key, std::uint64_t> terms_;
};

class GraphMonoidElement {
 public:
  GraphMonoidElement() = default;
  static GraphMonoidElement generator(Vertex v, std::uint64_t coef = 1);

  void add(Vertex v, std::uint64_t coef);
  GraphMonoidElement& operator+=(const GraphMonoidElement& other);
  friend GraphMonoidElement operator+(GraphMonoidElement a, const GraphMonoidElement& b) { return a += b; }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Vertex, std::uint64_t>& terms() const noexcept { return terms_; }
  VertexSet support() const;
  std::string to_string(const Graph& g) const;

  friend bool operator==(const GraphMonoidElement&, const GraphMonoidElement&) = default;

 private:
  std::map<Vertex, std::uint64_t> terms_;
};

enum class Equality { Equal, Distinct, Unknown };
const char* to_string(Equality e) noexcept;

inline constexpr std::size_t kDefaultEqualityBound = 32;

// Parallel substitution v(i) -> sum r(e)(i+1) at every regular vertex,
// applied `steps` times. Sink generators are fixed.
TalentedElement expand(const TalentedElement& x, const Graph& g, std::size_t steps);
GraphMonoidElement expand(const GraphMonoidElement& x, const Graph& g, std::size_t steps);

// Equal if expansions of a and b agree within `bound` steps each. On acyclic
// graphs the answer is exact: normal forms are sink-supported and the monoid
// is free on them.
Equality eq_bounded(const TalentedElement& a, const TalentedElement& b, const Graph& g,
                    std::size_t bound = kDefaultEqualityBound);
Equality graph_monoid_eq_bounded(const GraphMonoidElement& a, const GraphMonoidElement& b,
                                 const Graph& g, std::size_t bound = kDefaultEqualityBound);

}  // namespace gqw
