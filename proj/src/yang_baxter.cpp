#include "yang_baxter.hpp"

#include <algorithm>

#include "normal_form.hpp"

namespace nfrob {

namespace {

// The lifted operators live in n^3 x n^3 but carry O(n^3) nonzeros, so the
// verification products use a sparse row form of the very same matrices.
// Rows keep sorted column order and no explicit zeros, which makes equality
// a plain comparison.
struct SparseMat {
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;

  bool operator==(const SparseMat& o) const {
    return dim == o.dim && rows == o.rows;
  }
};

SparseMat sparse_of(const Matrix& m) {
  SparseMat s;
  s.dim = m.rows();
  s.rows.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) s.rows[i].emplace_back(j, m.at(i, j));
  return s;
}

// r (x) I_n on triple indices: ((a, k), (b, k)) for every r(a, b).
SparseMat sparse_lift_12(const SparseMat& r, std::size_t n) {
  SparseMat s;
  s.dim = r.dim * n;
  s.rows.resize(s.dim);
  for (std::size_t a = 0; a < r.dim; ++a)
    for (const auto& [b, v] : r.rows[a])
      for (std::size_t k = 0; k < n; ++k)
        s.rows[a * n + k].emplace_back(b * n + k, v);
  for (auto& row : s.rows)
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return s;
}

// I_n (x) r.
SparseMat sparse_lift_23(const SparseMat& r, std::size_t n) {
  SparseMat s;
  s.dim = n * r.dim;
  s.rows.resize(s.dim);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < r.dim; ++a)
      for (const auto& [b, v] : r.rows[a])
        s.rows[k * r.dim + a].emplace_back(k * r.dim + b, v);
  return s;
}

// Conjugation of lift_12 by I (x) tau, i.e. entries re-indexed by the
// involution (i, j, k) -> (i, k, j).
SparseMat sparse_lift_13(const SparseMat& r, std::size_t n) {
  SparseMat l12 = sparse_lift_12(r, n);
  auto swap_jk = [n](std::size_t idx) {
    std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
    return (i * n + k) * n + j;
  };
  SparseMat s;
  s.dim = l12.dim;
  s.rows.resize(s.dim);
  for (std::size_t row = 0; row < l12.dim; ++row)
    for (const auto& [col, v] : l12.rows[row])
      s.rows[swap_jk(row)].emplace_back(swap_jk(col), v);
  for (auto& row : s.rows)
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return s;
}

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b, const Ring& ring) {
  SparseMat c;
  c.dim = a.dim;
  c.rows.resize(c.dim);
  std::vector<Scalar> buf(a.dim, Scalar::zero(ring));
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.dim; ++i) {
    touched.clear();
    for (const auto& [k, av] : a.rows[i])
      for (const auto& [j, bv] : b.rows[k]) {
        if (buf[j].is_zero()) touched.push_back(j);
        buf[j] += av * bv;
      }
    std::sort(touched.begin(), touched.end());
    for (std::size_t j : touched) {
      if (!buf[j].is_zero()) c.rows[i].emplace_back(j, buf[j]);
      buf[j] = Scalar::zero(ring);
    }
  }
  return c;
}

}  // namespace

ROperator r_from_q_mult(const Algebra& a, const Tensor2& q) {
  const std::size_t n = a.dim();
  if (q.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor shape mismatch");
  Matrix mat(a.ring(), n * n, n * n);
  std::vector<Matrix> left = left_regular_rep(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      mat = mat + kronecker(left[i], left[j]).scaled(t);
    }
  return ROperator{std::move(mat), ROperatorKind::MultByQ, q};
}

ROperator r_from_q_twist(const Algebra& a, const Tensor2& q) {
  ROperator mult = r_from_q_mult(a, q);
  Matrix mat = mult.mat * swap_matrix(a.ring(), a.dim());
  return ROperator{std::move(mat), ROperatorKind::QTimesSwap, q};
}

Matrix swap_matrix(const Ring& ring, std::size_t n) {
  Matrix p(ring, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.at(i * n + j, j * n + i) = Scalar::one(ring);
  return p;
}

Matrix lift_12(const ROperator& r, std::size_t n) {
  return kronecker(r.mat, Matrix::identity(r.mat.ring(), n));
}

Matrix lift_23(const ROperator& r, std::size_t n) {
  return kronecker(Matrix::identity(r.mat.ring(), n), r.mat);
}

Matrix lift_13(const ROperator& r, std::size_t n) {
  Matrix id_tau = kronecker(Matrix::identity(r.mat.ring(), n),
                            swap_matrix(r.mat.ring(), n));
  return id_tau * lift_12(r, n) * id_tau;
}

bool verify_qybe(const ROperator& r, std::size_t n) {
  const Ring& ring = r.mat.ring();
  SparseMat rs = sparse_of(r.mat);
  SparseMat r12 = sparse_lift_12(rs, n);
  SparseMat r13 = sparse_lift_13(rs, n);
  SparseMat r23 = sparse_lift_23(rs, n);
  return sparse_mul(r12, sparse_mul(r13, r23, ring), ring) ==
         sparse_mul(r23, sparse_mul(r13, r12, ring), ring);
}

bool verify_eq2(const ROperator& r, std::size_t n) {
  const Ring& ring = r.mat.ring();
  SparseMat rs = sparse_of(r.mat);
  SparseMat r12 = sparse_lift_12(rs, n);
  SparseMat r13 = sparse_lift_13(rs, n);
  SparseMat r23 = sparse_lift_23(rs, n);
  SparseMat first = sparse_mul(r13, r12, ring);
  return first == sparse_mul(r23, r13, ring) &&
         first == sparse_mul(r12, r23, ring);
}

QIdentityReport verify_q_identities(const Algebra& a, const Tensor2& q) {
  if (!is_central(a, q))
    throw Error(ErrorCode::NotCentral,
                "verify_q_identities requires an A-central tensor");
  Tensor3 q12 = embed_12(a, q);
  Tensor3 q13 = embed_13(a, q);
  Tensor3 q23 = embed_23(a, q);
  Tensor3 p1 = mul_tensor3(a, q13, q12);
  Tensor3 p2 = mul_tensor3(a, q23, q13);
  Tensor3 p3 = mul_tensor3(a, q12, q23);
  QIdentityReport report;
  report.products_agree = p1 == p2 && p1 == p3;
  Tensor3 b1 = mul_tensor3(a, mul_tensor3(a, q12, q23), q12);
  Tensor3 b2 = mul_tensor3(a, mul_tensor3(a, q23, q12), q23);
  report.braid_identity = b1 == b2;
  return report;
}

AROperatorAlgebra ar_algebra(const Algebra& a, const ROperator& r) {
  const std::size_t n = a.dim();
  if (r.mat.rows() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "operator dimension mismatch");
  // Unknown F (n x n, flattened (u, w) -> u*n + w); equation per entry
  // ((u, v), (i, j)):  sum_w F(u,w) R((w,v),(i,j)) - sum_w R((u,v),(i,w)) F(w,j) = 0
  Matrix sys(a.ring(), n * n * n * n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t row = ((u * n + v) * n + i) * n + j;
          for (std::size_t w = 0; w < n; ++w) {
            const Scalar& rw = r.mat.at(w * n + v, i * n + j);
            if (!rw.is_zero()) sys.at(row, u * n + w) += rw;
            const Scalar& rv = r.mat.at(u * n + v, i * n + w);
            if (!rv.is_zero()) sys.at(row, w * n + j) -= rv;
          }
        }
  std::vector<Vec> kernel = a.ring().kind() == RingKind::Integers
                                ? integer_kernel_basis(sys)
                                : kernel_basis(sys);
  AROperatorAlgebra ar;
  for (const Vec& v : kernel) {
    Matrix f(a.ring(), n, n);
    for (std::size_t uu = 0; uu < n; ++uu)
      for (std::size_t ww = 0; ww < n; ++ww) f.at(uu, ww) = v[uu * n + ww];
    ar.basis.push_back(std::move(f));
  }
  // Id_A is the unit of A(R); assert the solver's basis actually spans it
  // (over Z via the rational extension of the lattice).
  Matrix id = Matrix::identity(a.ring(), n);
  bool rational = !a.ring().is_field();
  SpanBasis span(rational ? Ring::rationals() : a.ring(), n * n);
  for (const Matrix& f : ar.basis)
    span.insert(rational ? to_rationals(f.entries()) : f.entries());
  ar.contains_identity =
      span.contains(rational ? to_rationals(id.entries()) : id.entries());
  return ar;
}

std::vector<Matrix> left_regular_rep(const Algebra& a) {
  std::vector<Matrix> reps;
  reps.reserve(a.dim());
  for (std::size_t p = 0; p < a.dim(); ++p)
    reps.push_back(left_mult_matrix(a, p));
  return reps;
}

MonomorphismReport check_monomorphism(const Algebra& a, const ROperator& r) {
  const std::size_t n = a.dim();
  MonomorphismReport report;
  Matrix id = Matrix::identity(a.ring(), n);
  report.image_in_ar = true;
  for (std::size_t p = 0; p < n; ++p) {
    Matrix lp = left_mult_matrix(a, p);
    if (kronecker(lp, id) * r.mat != r.mat * kronecker(id, lp)) {
      report.image_in_ar = false;
      break;
    }
  }
  Matrix stacked(a.ring(), n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    Matrix lp = left_mult_matrix(a, p);
    for (std::size_t k = 0; k < n * n; ++k)
      stacked.at(p, k) = lp.entries()[k];
  }
  report.injective = rank(stacked) == n;

  // round-trip: Q := R(1 (x) 1) must be the source tensor, and central
  Vec unit2 = zero_vec(a.ring(), n * n);
  const Vec& u = a.unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u[i].is_zero() || u[j].is_zero()) continue;
      unit2[i * n + j] = u[i] * u[j];
    }
  Vec q_vec = r.mat.mul_vec(unit2);
  Tensor2 recovered(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) recovered.at(i, j) = q_vec[i * n + j];
  bool central = is_central(a, recovered);
  if (r.kind == ROperatorKind::MultByQ && r.source_q) {
    report.roundtrip_central = central && recovered == *r.source_q;
    report.source_q_central = is_central(a, *r.source_q);
  } else {
    report.roundtrip_central = central;
    if (r.source_q) report.source_q_central = is_central(a, *r.source_q);
  }
  return report;
}

bool check_r_in_ar_tensor_ar(const Algebra& a, const Tensor2& q,
                             const AROperatorAlgebra& ar) {
  if (!a.ring().is_field())
    throw Error(ErrorCode::WrongRing,
                "membership in A(R) (x) A(R) is tested over fields only");
  const std::size_t n = a.dim();
  if (q.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor shape mismatch");
  // coefficient matrix M of R in End(A) (x) End(A): rows index the first
  // factor's entries, columns the second's
  Matrix m(a.ring(), n * n, n * n);
  std::vector<Matrix> left = left_regular_rep(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      for (std::size_t e1 = 0; e1 < n * n; ++e1) {
        const Scalar& li = left[i].entries()[e1];
        if (li.is_zero()) continue;
        for (std::size_t e2 = 0; e2 < n * n; ++e2) {
          const Scalar& lj = left[j].entries()[e2];
          if (lj.is_zero()) continue;
          m.at(e1, e2) += t * li * lj;
        }
      }
    }
  SpanBasis span(a.ring(), n * n);
  for (const Matrix& f : ar.basis) span.insert(f.entries());
  for (std::size_t r = 0; r < n * n; ++r)
    if (!span.contains(m.row(r))) return false;
  for (std::size_t c = 0; c < n * n; ++c)
    if (!span.contains(m.col(c))) return false;
  return true;
}

}  // namespace nfrob
