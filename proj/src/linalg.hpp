#pragma once

#include <optional>

#include "matrix.hpp"

namespace nfrob {

// Field-ring linear algebra. Every routine is deterministic: pivots are
// chosen left to right, first nonzero row wins, echelon forms are fully
// reduced. Callers over Z get either an exact lattice routine (normal_form.hpp)
// or the rank of the rational extension.

struct Echelon {
  Matrix mat;                       // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

Echelon reduced_row_echelon(Matrix m);

// Canonical kernel basis: one vector per free column f, with coordinate f
// equal to 1, other free coordinates 0, sorted by f. Field rings only;
// integer matrices go through integer_kernel_basis.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of m*x = b with free variables set to 0, or nullopt.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

Matrix inverse(const Matrix& m);

// Exact rank; over Z this is the rank of the rational extension.
std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

// Incremental echelon span, used for membership tests against a growing
// family without re-eliminating from scratch.
class SpanBasis {
 public:
  explicit SpanBasis(const Ring& ring, std::size_t dim);

  // Returns true if v enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  void reduce(Vec& v) const;

  Ring ring_;
  std::size_t dim_;
  std::vector<Vec> rows_;             // echelon rows, pivot coefficient 1
  std::vector<std::size_t> pivots_;   // strictly increasing? kept sorted
};

}  // namespace nfrob
