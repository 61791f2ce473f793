#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "scalar.hpp"

namespace nfrob {

using Vec = std::vector<Scalar>;

Vec vec_of_ints(const Ring& ring, std::initializer_list<long> values);
Vec basis_vec(const Ring& ring, std::size_t n, std::size_t i);
Vec zero_vec(const Ring& ring, std::size_t n);
bool vec_is_zero(const Vec& v);

// Dense row-major matrix over one scalar ring. Problem sizes stay at desk
// scale (largest objects are n^3 x n^3 with n <= 12) so no sparse storage;
// multiplication skips zero entries, which is where the sparsity actually is.
class Matrix {
 public:
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(ring)) {}

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix of_ints(const Ring& ring,
                        std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const Ring& ring, const std::vector<Vec>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  // Row-major entries; a 1-column reshape of an n x n matrix uses the global
  // pair convention (i, j) -> i*n + j.
  const std::vector<Scalar>& entries() const { return e_; }
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec mul_vec(const Vec& v) const;

  bool operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

// Kronecker product; row (i, k) of the result is row i*rows(b) + k.
Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix to_rationals(const Matrix& m);
Vec to_rationals(const Vec& v);

}  // namespace nfrob
