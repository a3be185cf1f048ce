#include "gqw/rep_matrix.hpp"

#include <algorithm>

#include "gqw/error.hpp"

namespace gqw {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& b) const {
  if (cols_ != b.rows_)
    throw PreconditionError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  RationalMatrix out(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a * b(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix shapes differ");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& b) const { return *this + b.scaled(-1); }

RationalMatrix RationalMatrix::scaled(const mpq_class& k) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (!is_square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    mpq_class p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      mpq_class f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).get_str();
    }
    out += ']';
  }
  return out + "]";
}

FiniteRep::FiniteRep(Graph g, std::vector<std::size_t> dims, std::vector<RationalMatrix> matrices)
    : double_(std::move(g)), dims_(std::move(dims)), matrices_(std::move(matrices)) {
  const Graph& base = double_.base();
  if (dims_.size() != base.num_vertices()) throw PreconditionError("one dimension per vertex is required");
  if (matrices_.size() != double_.num_edges()) throw PreconditionError("one matrix per real and ghost edge is required");
  for (EdgeIndex e = 0; e < double_.num_edges(); ++e) {
    const DoubleEdge& d = double_.edge(e);
    const RationalMatrix& m = matrices_[e];
    // rho(e): rho(s(e)) -> rho(r(e)) acting on column vectors.
    if (m.rows() != dims_[d.range] || m.cols() != dims_[d.source])
      throw PreconditionError("matrix " + d.id + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(dims_[d.range]) + "x" + std::to_string(dims_[d.source]));
  }
}

RationalMatrix rep_to_module_action(const FiniteRep& rep, Vertex start) {
  if (start >= rep.dims().size()) throw PreconditionError("unknown vertex index " + std::to_string(start));
  return RationalMatrix::identity(rep.dims()[start]);
}

RationalMatrix rep_to_module_action(const FiniteRep& rep, const std::vector<EdgeIndex>& path) {
  if (path.empty()) throw PreconditionError("empty path has no start vertex");
  const DoubleGraph& dg = rep.double_graph();
  RationalMatrix acc = RationalMatrix::identity(rep.dims()[dg.edge(path.front()).source]);
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0 && dg.edge(path[k - 1]).range != dg.edge(path[k]).source)
      throw PreconditionError("edges " + dg.edge(path[k - 1]).id + " and " + dg.edge(path[k]).id +
                              " are not composable");
    acc = rep.matrix(path[k]) * acc;
  }
  return acc;
}

CKResult validate_ck(const FiniteRep& rep) {
  const DoubleGraph& dg = rep.double_graph();
  CKRelationSet rel = ck_relations(dg);
  for (const Relation& r : rel.relations) {
    RationalMatrix sum(rep.dims()[r.range], rep.dims()[r.source]);
    for (const PathTerm& t : r.terms) {
      RationalMatrix m = t.edges.empty() ? rep_to_module_action(rep, t.start) : rep_to_module_action(rep, t.edges);
      sum = sum + m.scaled(mpq_class(static_cast<long>(t.coef)));
    }
    if (!sum.is_zero()) return CKViolation{r.id, std::move(sum)};
  }
  return CKValid{};
}

std::vector<std::size_t> dim_vector(const FiniteRep& rep) { return rep.dims(); }

ShapeResult shape_check(const FiniteRep& rep) {
  const Graph& g = rep.graph();
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.is_source(v) && !g.is_sink(v))
      throw PreconditionError("graph has a non-isolated source " + g.vertex_name(v));
  const auto& n = rep.dims();
  VertexSet on_cycle;
  for (const auto& c : maximal_cycles(g)) {
    for (Vertex v : c.vertices) {
      on_cycle.insert(v);
      if (n[v] != n[c.vertices.front()])
        return NonConformant{v, "dimension differs along maximal cycle " + c.id(g)};
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (on_cycle.count(v) || g.is_isolated(v) || n[v] == 0) continue;
    return NonConformant{v, "nonzero dimension off the maximal cycles"};
  }
  return Conformant{};
}

}  // namespace gqw
