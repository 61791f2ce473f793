#include "algebra.hpp"

#include <array>

namespace nfrob {

Algebra::Algebra(const Ring& ring, std::size_t n, std::vector<Scalar> table,
                 Vec unit, std::vector<std::string> basis_labels)
    : ring_(ring), n_(n), table_(std::move(table)), unit_(std::move(unit)),
      labels_(std::move(basis_labels)) {
  if (n_ == 0)
    throw Error(ErrorCode::InvalidArgument, "algebra dimension must be >= 1");
  if (table_.size() != n_ * n_ * n_)
    throw Error(ErrorCode::DimensionMismatch,
                "structure-constant table has wrong size");
  if (unit_.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "unit vector has wrong length");
  for (const Scalar& s : table_) require_same_ring(ring_, s.ring());
  for (const Scalar& s : unit_) require_same_ring(ring_, s.ring());
  if (!labels_.empty() && labels_.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "basis label count mismatch");
  sparse_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      auto& row = sparse_[i * n_ + j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) row.emplace_back(k, c(i, j, k));
    }
}

std::string Algebra::basis_label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

ValidationReport validate(const Algebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  // (e_i e_j) e_k vs e_i (e_j e_k), coefficient on e_m
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.zero_element();
        for (const auto& [l, cl] : a.product_row(i, j))
          for (const auto& [m, cm] : a.product_row(l, k)) lhs[m] += cl * cm;
        Vec rhs = a.zero_element();
        for (const auto& [l, cl] : a.product_row(j, k))
          for (const auto& [m, cm] : a.product_row(i, l)) rhs[m] += cl * cm;
        for (std::size_t m = 0; m < n; ++m)
          if (lhs[m] != rhs[m])
            report.associativity_failures.push_back({i, j, k, m});
      }
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = a.basis_element(i);
    if (mul(a, a.unit(), e) != e) report.left_unit_failures.push_back(i);
    if (mul(a, e, a.unit()) != e) report.right_unit_failures.push_back(i);
  }
  return report;
}

Vec mul(const Algebra& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  Vec r = a.zero_element();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& [k, ck] : a.product_row(i, j)) r[k] += xy * ck;
    }
  }
  return r;
}

Matrix left_mult_matrix(const Algebra& a, std::size_t p) {
  const std::size_t n = a.dim();
  Matrix m(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [k, ck] : a.product_row(p, i)) m.at(k, i) = ck;
  return m;
}

Matrix right_mult_matrix(const Algebra& a, std::size_t p) {
  const std::size_t n = a.dim();
  Matrix m(a.ring(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [k, ck] : a.product_row(j, p)) m.at(k, j) = ck;
  return m;
}

Matrix left_mult_operator(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  Matrix m(a.ring(), n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, ck] : a.product_row(p, i)) m.at(k, i) += x[p] * ck;
  }
  return m;
}

Matrix right_mult_operator(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  Matrix m(a.ring(), n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, ck] : a.product_row(j, p)) m.at(k, j) += x[p] * ck;
  }
  return m;
}

}  // namespace nfrob
