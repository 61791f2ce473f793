#include "tensor.hpp"

namespace nfrob {

Tensor2 tensor_of(const Algebra& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  Tensor2 t(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      t.at(i, j) = x[i] * y[j];
    }
  }
  return t;
}

Tensor2 tensor2_add(const Tensor2& s, const Tensor2& t) {
  return Tensor2(s.coeffs + t.coeffs);
}

Tensor2 tensor2_scaled(const Tensor2& s, const Scalar& c) {
  return Tensor2(s.coeffs.scaled(c));
}

Tensor2 mul_tensor2(const Algebra& a, const Tensor2& s, const Tensor2& t) {
  const std::size_t n = a.dim();
  if (s.dim() != n || t.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor shape mismatch");
  Tensor2 r(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& sij = s.at(i, j);
      if (sij.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& tpq = t.at(p, q);
          if (tpq.is_zero()) continue;
          const Scalar f = sij * tpq;
          for (const auto& [u, cu] : a.product_row(i, p))
            for (const auto& [v, cv] : a.product_row(j, q))
              r.at(u, v) += f * cu * cv;
        }
    }
  return r;
}

Tensor3 mul_tensor3(const Algebra& a, const Tensor3& s, const Tensor3& t) {
  const std::size_t n = a.dim();
  if (s.dim() != n || t.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor shape mismatch");
  Tensor3 r(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& sijk = s.at(i, j, k);
        if (sijk.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t w = 0; w < n; ++w) {
              const Scalar& tpqw = t.at(p, q, w);
              if (tpqw.is_zero()) continue;
              const Scalar f = sijk * tpqw;
              for (const auto& [u, cu] : a.product_row(i, p))
                for (const auto& [v, cv] : a.product_row(j, q))
                  for (const auto& [z, cz] : a.product_row(k, w))
                    r.at(u, v, z) += f * cu * cv * cz;
            }
      }
  return r;
}

Tensor3 embed_12(const Algebra& a, const Tensor2& q) {
  const std::size_t n = a.dim();
  Tensor3 r(a.ring(), n);
  const Vec& u = a.unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (u[m].is_zero()) continue;
        r.at(i, j, m) += t * u[m];
      }
    }
  return r;
}

Tensor3 embed_13(const Algebra& a, const Tensor2& q) {
  const std::size_t n = a.dim();
  Tensor3 r(a.ring(), n);
  const Vec& u = a.unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (u[m].is_zero()) continue;
        r.at(i, m, j) += t * u[m];
      }
    }
  return r;
}

Tensor3 embed_23(const Algebra& a, const Tensor2& q) {
  const std::size_t n = a.dim();
  Tensor3 r(a.ring(), n);
  const Vec& u = a.unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (u[m].is_zero()) continue;
        r.at(m, i, j) += t * u[m];
      }
    }
  return r;
}

Tensor2 act_left(const Algebra& a, const Vec& x, const Tensor2& q) {
  return Tensor2(left_mult_operator(a, x) * q.coeffs);
}

Tensor2 act_right(const Algebra& a, const Tensor2& q, const Vec& x) {
  return Tensor2(q.coeffs * right_mult_operator(a, x).transpose());
}

}  // namespace nfrob
