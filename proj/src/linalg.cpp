#include "linalg.hpp"

#include <algorithm>

namespace nfrob {

namespace {

void require_field(const Matrix& m, const char* op) {
  if (!m.ring().is_field())
    throw Error(ErrorCode::WrongRing,
                std::string(op) + " needs a field ring; use the integer "
                                  "lattice routines over Z");
}

}  // namespace

Echelon reduced_row_echelon(Matrix m) {
  require_field(m, "row reduction");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m.at(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    Scalar inv = m.at(pr, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m.at(pr, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (m.at(pr, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(pr, j);
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  require_field(m, "kernel_basis");
  Echelon e = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.ring(), cols);
    v[f] = Scalar::one(m.ring());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.mat.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  require_field(m, "solve_linear");
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  Matrix aug(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  for (std::size_t c : e.pivots)
    if (c == m.cols()) return std::nullopt;  // inconsistent row 0...0 | 1
  Vec x = zero_vec(m.ring(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.mat.at(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (m.ring().kind() == RingKind::Integers) {
    Scalar det = determinant(m);
    if (!(det.to_mpq() == 1 || det.to_mpq() == -1))
      throw Error(ErrorCode::NotUnimodular,
                  "integer matrix has determinant " + det.str());
    Matrix inv_q = inverse(to_rationals(m));
    Matrix r(m.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.at(i, j) = Scalar::from_mpq(m.ring(), inv_q.at(i, j).to_mpq());
    return r;
  }
  Matrix aug(m.ring(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.ring());
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix r(m.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = e.mat.at(i, n + j);
  return r;
}

std::size_t rank(const Matrix& m) {
  if (m.ring().kind() == RingKind::Integers)
    return rank(to_rationals(m));
  return reduced_row_echelon(m).pivots.size();
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (m.ring().kind() == RingKind::Integers) {
    Scalar det_q = determinant(to_rationals(m));
    return Scalar::from_mpq(m.ring(), det_q.to_mpq());
  }
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.ring());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a.at(sel, c).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(a.ring());
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      const Scalar f = a.at(i, c);
      if (f.is_zero()) continue;
      const Scalar scale = f * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (a.at(c, j).is_zero()) continue;
        a.at(i, j) -= scale * a.at(c, j);
      }
    }
  }
  return det;
}

SpanBasis::SpanBasis(const Ring& ring, std::size_t dim)
    : ring_(ring), dim_(dim) {
  if (!ring.is_field())
    throw Error(ErrorCode::WrongRing, "SpanBasis needs a field ring");
}

void SpanBasis::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Scalar f = c;  // pivot coefficient of rows_[r] is 1
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rows_[r][j].is_zero()) continue;
      v[j] -= f * rows_[r][j];
    }
  }
}

bool SpanBasis::insert(Vec v) {
  if (v.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "span vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (Scalar& s : v) s *= inv;
  // keep existing rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar f = rows_[r][p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      rows_[r][j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBasis::contains(Vec v) const {
  if (v.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "span vector length mismatch");
  reduce(v);
  return vec_is_zero(v);
}

}  // namespace nfrob
