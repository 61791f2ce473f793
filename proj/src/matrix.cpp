#include "matrix.hpp"

namespace nfrob {

Vec vec_of_ints(const Ring& ring, std::initializer_list<long> values) {
  Vec v;
  v.reserve(values.size());
  for (long x : values) v.push_back(Scalar::of(ring, x));
  return v;
}

Vec basis_vec(const Ring& ring, std::size_t n, std::size_t i) {
  Vec v(n, Scalar::zero(ring));
  v[i] = Scalar::one(ring);
  return v;
}

Vec zero_vec(const Ring& ring, std::size_t n) {
  return Vec(n, Scalar::zero(ring));
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::of_ints(
    const Ring& ring,
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(ring, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    std::size_t j = 0;
    for (long x : row) m.at(i, j++) = Scalar::of(ring, x);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix subtraction shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (cols_ != o.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  require_same_ring(ring_, s.ring());
  Matrix r = *this;
  for (Scalar& e : r.e_) e *= s;
  return r;
}

Vec Matrix::mul_vec(const Vec& v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vec r = zero_vec(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero() || v[j].is_zero()) continue;
      r[i] += a * v[j];
    }
  return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  Matrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

Matrix to_rationals(const Matrix& m) {
  Ring q = Ring::rationals();
  Matrix r(q, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = Scalar::from_mpq(q, m.at(i, j).to_mpq());
  return r;
}

Vec to_rationals(const Vec& v) {
  Ring q = Ring::rationals();
  Vec r;
  r.reserve(v.size());
  for (const Scalar& s : v) r.push_back(Scalar::from_mpq(q, s.to_mpq()));
  return r;
}

}  // namespace nfrob
