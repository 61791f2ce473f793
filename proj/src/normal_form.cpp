#include "normal_form.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace nfrob {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

void require_integers(const Matrix& m, const char* op) {
  if (m.ring().kind() != RingKind::Integers)
    throw Error(ErrorCode::WrongRing, std::string(op) + " needs ring Z");
}

ZMat to_zmat(const Matrix& m) {
  ZMat a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).to_mpz();
  return a;
}

Matrix from_zmat(const ZMat& a, std::size_t rows, std::size_t cols) {
  Ring z = Ring::integers();
  Matrix m(z, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::from_mpz(z, a[i][j]);
  return m;
}

ZMat zidentity(std::size_t n) {
  ZMat u(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

// row_i -= q * row_j
void row_axpy(ZMat& m, std::size_t i, std::size_t j, const mpz_class& q) {
  if (q == 0) return;
  auto& ri = m[i];
  auto& rj = m[j];
  for (std::size_t k = 0; k < ri.size(); ++k) ri[k] -= q * rj[k];
}

void row_negate(ZMat& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

// In-place row HNF of a; u collects the same row operations.
void hnf_inplace(ZMat& a, ZMat& u, std::size_t rows, std::size_t cols) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    // euclid down column c until a single nonzero remains at row pr
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pr; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (best == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0)
          best = i;
      }
      if (best == rows) break;  // column is zero below pr
      if (best != pr) {
        std::swap(a[best], a[pr]);
        std::swap(u[best], u[pr]);
      }
      bool cleared = true;
      for (std::size_t i = pr + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pr][c].get_mpz_t());
        row_axpy(a, i, pr, q);
        row_axpy(u, i, pr, q);
        if (a[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (pr < rows && a[pr][c] != 0) {
      if (a[pr][c] < 0) {
        row_negate(a, pr);
        row_negate(u, pr);
      }
      // reduce entries above the pivot into [0, pivot)
      for (std::size_t i = 0; i < pr; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pr][c].get_mpz_t());
        row_axpy(a, i, pr, q);
        row_axpy(u, i, pr, q);
      }
      ++pr;
    }
  }
}

}  // namespace

HermiteResult hermite_normal_form(const Matrix& m) {
  require_integers(m, "hermite_normal_form");
  ZMat a = to_zmat(m);
  ZMat u = zidentity(m.rows());
  hnf_inplace(a, u, m.rows(), m.cols());
  return HermiteResult{from_zmat(a, m.rows(), m.cols()),
                       from_zmat(u, m.rows(), m.rows())};
}

std::vector<Vec> integer_kernel_basis(const Matrix& m) {
  require_integers(m, "integer_kernel_basis");
  // Row HNF of m^T: zero rows of h correspond to rows of u spanning the
  // kernel lattice of m.
  const std::size_t rows = m.cols(), cols = m.rows();
  ZMat a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(j, i).to_mpz();
  ZMat u = zidentity(rows);
  hnf_inplace(a, u, rows, cols);
  ZMat kernel;
  for (std::size_t i = 0; i < rows; ++i) {
    bool zero = true;
    for (const auto& x : a[i])
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) kernel.push_back(u[i]);
  }
  // canonicalize the basis itself
  ZMat ku = zidentity(kernel.size());
  hnf_inplace(kernel, ku, kernel.size(), rows);
  std::vector<Vec> basis;
  Ring z = Ring::integers();
  for (const auto& row : kernel) {
    Vec v;
    v.reserve(rows);
    for (const auto& x : row) v.push_back(Scalar::from_mpz(z, x));
    basis.push_back(std::move(v));
  }
  return basis;
}

SmithResult smith_normal_form(const Matrix& m) {
  require_integers(m, "smith_normal_form");
  const std::size_t rows = m.rows(), cols = m.cols();
  ZMat s = to_zmat(m);
  ZMat u = zidentity(rows);
  ZMat v = zidentity(cols);

  auto col_axpy = [&](std::size_t j, std::size_t k, const mpz_class& q) {
    // col_j -= q * col_k, mirrored on v
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) s[i][j] -= q * s[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(s[i][j], s[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][k]);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate entry of least absolute value in the trailing block
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s[i][j] == 0) continue;
        if (bi == rows ||
            mpz_cmpabs(s[i][j].get_mpz_t(), s[bi][bj].get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) break;  // trailing block is zero
    if (bi != t) {
      std::swap(s[bi], s[t]);
      std::swap(u[bi], u[t]);
    }
    if (bj != t) col_swap(bj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        mpz_class q = s[i][t] / s[t][t];
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (s[i][t] != 0) {
          std::swap(s[i], s[t]);
          std::swap(u[i], u[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        mpz_class q = s[t][j] / s[t][t];
        col_axpy(j, t, q);
        if (s[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce the divisibility chain: s[t][t] must divide the trailing block
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (s[i][j] % s[t][t] != 0) {
            row_axpy(s, t, i, mpz_class(-1));  // row_t += row_i
            row_axpy(u, t, i, mpz_class(-1));
            clean = false;
          }
    }
    if (s[t][t] < 0) {
      row_negate(s, t);
      row_negate(u, t);
    }
    ++t;
  }
  return SmithResult{from_zmat(u, rows, rows), from_zmat(s, rows, cols),
                     from_zmat(v, cols, cols)};
}

}  // namespace nfrob
