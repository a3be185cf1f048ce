#pragma once

// Finite-dimensional representations of the double graph over Q, checked
// against the Cuntz-Krieger relations.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gqw/covering.hpp"
#include "gqw/graph.hpp"

namespace gqw {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Throws PreconditionError on ragged input.
  static RationalMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  RationalMatrix operator*(const RationalMatrix& b) const;
  RationalMatrix operator+(const RationalMatrix& b) const;
  RationalMatrix operator-(const RationalMatrix& b) const;
  RationalMatrix scaled(const mpq_class& k) const;
  // nullopt when singular. Requires a square matrix.
  std::optional<RationalMatrix> inverse() const;

  // "[[1,1/2],[0,1]]"
  std::string to_string() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// A representation rho with rho(v) = Q^{n_v} and, for a path p = e1...en,
/// rho(p) = rho(en)...rho(e1). M_e is n_{r(e)} x n_{s(e)} and M_{e*} is
/// n_{s(e)} x n_{r(e)}.
class FiniteRep {
 public:
  // `matrices` is indexed like DoubleGraph edges. Throws PreconditionError on
  // a shape mismatch.
  FiniteRep(Graph g, std::vector<std::size_t> dims, std::vector<RationalMatrix> matrices);

  const Graph& graph() const noexcept { return double_.base(); }
  const DoubleGraph& double_graph() const noexcept { return double_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const RationalMatrix& matrix(EdgeIndex double_edge) const { return matrices_.at(double_edge); }

 private:
  DoubleGraph double_;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> matrices_;
};

// rho of a double-graph path; the empty path at `start` gives the identity.
// Throws PreconditionError if the path is not composable.
RationalMatrix rep_to_module_action(const FiniteRep& rep, const std::vector<EdgeIndex>& path);
RationalMatrix rep_to_module_action(const FiniteRep& rep, Vertex start);

struct CKValid {};
struct CKViolation {
  std::string relation;
  RationalMatrix residual;
};
using CKResult = std::variant<CKValid, CKViolation>;

// Evaluates every Cuntz-Krieger relation in order and reports the first with
// a nonzero residual.
CKResult validate_ck(const FiniteRep& rep);

std::vector<std::size_t> dim_vector(const FiniteRep& rep);

struct Conformant {};
struct NonConformant {
  Vertex vertex = 0;
  std::string reason;
};
using ShapeResult = std::variant<Conformant, NonConformant>;

// Dimensions must be constant on each maximal cycle and zero at every other
// vertex that is not isolated. Requires isolated sources only.
ShapeResult shape_check(const FiniteRep& rep);

}  // namespace gqw
