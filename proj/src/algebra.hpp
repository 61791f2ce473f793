#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace nfrob {

// Finite-dimensional associative algebra given by structure constants:
// e_i * e_j = sum_k c(i,j,k) e_k. The unit is an arbitrary coefficient
// vector (path algebras have unit = sum of vertex idempotents). Instances
// are immutable after construction.
class Algebra {
 public:
  Algebra(const Ring& ring, std::size_t n, std::vector<Scalar> table, Vec unit,
          std::vector<std::string> basis_labels = {});

  std::size_t dim() const { return n_; }
  const Ring& ring() const { return ring_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }

  // Nonzero coefficients of e_i * e_j, precomputed once; every hot loop in
  // the tensor and operator code walks these instead of the dense table.
  const std::vector<std::pair<std::size_t, Scalar>>& product_row(
      std::size_t i, std::size_t j) const {
    return sparse_[i * n_ + j];
  }

  Vec basis_element(std::size_t i) const { return basis_vec(ring_, n_, i); }
  Vec zero_element() const { return zero_vec(ring_, n_); }
  std::string basis_label(std::size_t i) const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Scalar> table_;
  Vec unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

struct ValidationReport {
  // (i, j, k, m): coefficient of e_m in (e_i e_j) e_k - e_i (e_j e_k) is nonzero
  std::vector<std::array<std::size_t, 4>> associativity_failures;
  std::vector<std::size_t> left_unit_failures;
  std::vector<std::size_t> right_unit_failures;

  bool ok() const {
    return associativity_failures.empty() && left_unit_failures.empty() &&
           right_unit_failures.empty();
  }
};

ValidationReport validate(const Algebra& a);

Vec mul(const Algebra& a, const Vec& x, const Vec& y);

// L_p with L_p * coeffs(x) = coeffs(e_p * x); entries (L_p)(k,i) = c(p,i,k).
Matrix left_mult_matrix(const Algebra& a, std::size_t p);
// rho_p with rho_p * coeffs(x) = coeffs(x * e_p); entries (rho_p)(m,j) = c(j,p,m).
Matrix right_mult_matrix(const Algebra& a, std::size_t p);

// Left/right multiplication by an arbitrary element, as an n x n operator.
Matrix left_mult_operator(const Algebra& a, const Vec& x);
Matrix right_mult_operator(const Algebra& a, const Vec& x);

}  // namespace nfrob
