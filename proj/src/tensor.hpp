#pragma once

#include "algebra.hpp"

namespace nfrob {

// Element sum_{i,j} T(i,j) e_i (x) e_j of A (x) A, stored as its n x n
// coefficient matrix. Flattened indices follow the global convention
// (i, j) -> i*n + j, so coeffs.entries() is the vec() of the tensor.
struct Tensor2 {
  Matrix coeffs;

  explicit Tensor2(Matrix m) : coeffs(std::move(m)) {
    if (!coeffs.is_square())
      throw Error(ErrorCode::DimensionMismatch, "Tensor2 must be square");
  }
  Tensor2(const Ring& ring, std::size_t n) : coeffs(ring, n, n) {}

  std::size_t dim() const { return coeffs.rows(); }
  const Ring& ring() const { return coeffs.ring(); }
  Scalar& at(std::size_t i, std::size_t j) { return coeffs.at(i, j); }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return coeffs.at(i, j);
  }
  bool is_zero() const { return coeffs.is_zero(); }
  bool operator==(const Tensor2& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Tensor2& o) const { return !(*this == o); }
};

// Element of A (x) A (x) A with flattened index (i, j, k) -> (i*n + j)*n + k.
class Tensor3 {
 public:
  Tensor3(const Ring& ring, std::size_t n)
      : ring_(ring), n_(n), c_(n * n * n, Scalar::zero(ring)) {}

  std::size_t dim() const { return n_; }
  const Ring& ring() const { return ring_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Scalar>& entries() const { return c_; }
  bool operator==(const Tensor3& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && c_ == o.c_;
  }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Scalar> c_;
};

Tensor2 tensor_of(const Algebra& a, const Vec& x, const Vec& y);
Tensor2 tensor2_add(const Tensor2& s, const Tensor2& t);
Tensor2 tensor2_scaled(const Tensor2& s, const Scalar& c);

// Product in the algebra A (x) A: (x (x) y) * (u (x) v) = xu (x) yv extended
// bilinearly.
Tensor2 mul_tensor2(const Algebra& a, const Tensor2& s, const Tensor2& t);
Tensor3 mul_tensor3(const Algebra& a, const Tensor3& s, const Tensor3& t);

// Q = sum x_i (x) y_i goes to sum x_i (x) y_i (x) 1 (and the 13/23 analogues),
// with the free slot expanded over the unit's coefficient vector.
Tensor3 embed_12(const Algebra& a, const Tensor2& q);
Tensor3 embed_13(const Algebra& a, const Tensor2& q);
Tensor3 embed_23(const Algebra& a, const Tensor2& q);

// x * q and q * x: multiplication on the outer slots of A (x) A.
Tensor2 act_left(const Algebra& a, const Vec& x, const Tensor2& q);
Tensor2 act_right(const Algebra& a, const Tensor2& q, const Vec& x);

}  // namespace nfrob
