#pragma once

#include <optional>

#include "frobenius.hpp"

namespace nfrob {

// Operators on A (x) A are n^2 x n^2 matrices acting on coefficient vectors
// with the pair convention (i, j) -> i*n + j; triple-tensor lifts use
// (i, j, k) -> (i*n + j)*n + k. Building an R from a non-central q is allowed
// (negative tests need it); the theorem-level checks report centrality.

enum class ROperatorKind { MultByQ, QTimesSwap, Custom };

struct ROperator {
  Matrix mat;  // n^2 x n^2
  ROperatorKind kind = ROperatorKind::Custom;
  std::optional<Tensor2> source_q;
};

// R(a (x) b) = Q * (a (x) b) = sum x_i a (x) y_i b; mat = sum T(i,j) L_i (x) L_j.
ROperator r_from_q_mult(const Algebra& a, const Tensor2& q);

// R = Q tau: twist first, then multiply by Q.
ROperator r_from_q_twist(const Algebra& a, const Tensor2& q);

// Permutation matrix of the twist a (x) b -> b (x) a on pair indices.
Matrix swap_matrix(const Ring& ring, std::size_t n);

// R^{12} = R (x) Id, R^{23} = Id (x) R, R^{13} = (Id (x) tau)(R (x) Id)(Id (x) tau).
Matrix lift_12(const ROperator& r, std::size_t n);
Matrix lift_23(const ROperator& r, std::size_t n);
Matrix lift_13(const ROperator& r, std::size_t n);

// R12 R13 R23 = R23 R13 R12 as an exact n^3 x n^3 identity.
bool verify_qybe(const ROperator& r, std::size_t n);

// R13 R12 = R23 R13 = R12 R23, exactly.
bool verify_eq2(const ROperator& r, std::size_t n);

struct QIdentityReport {
  bool products_agree = false;   // Q13 Q12 = Q23 Q13 = Q12 Q23
  bool braid_identity = false;   // Q12 Q23 Q12 = Q23 Q12 Q23
  bool ok() const { return products_agree && braid_identity; }
};

// Element-level identities in A (x) A (x) A via the embeddings; requires a
// central q.
QIdentityReport verify_q_identities(const Algebra& a, const Tensor2& q);

struct AROperatorAlgebra {
  std::vector<Matrix> basis;  // n x n operators F with (F (x) I) R = R (I (x) F)
  bool contains_identity = false;
};

// Canonical basis of A(R) = {f in End(A) : (f (x) Id) R = R (Id (x) f)}.
// Fields use the canonical kernel; over Z the lattice basis is returned.
AROperatorAlgebra ar_algebra(const Algebra& a, const ROperator& r);

// i(e_p) = L_p for each basis index p.
std::vector<Matrix> left_regular_rep(const Algebra& a);

struct MonomorphismReport {
  bool image_in_ar = false;      // every i(e_p) commutes with R as required
  bool injective = false;        // the n operators i(e_p) are independent
  bool roundtrip_central = false;  // R(1 (x) 1) recovers source_q and is central
  std::optional<bool> source_q_central;  // recorded centrality status
  bool ok() const { return image_in_ar && injective && roundtrip_central; }
};

MonomorphismReport check_monomorphism(const Algebra& a, const ROperator& r);

// R = sum T(i,j) L_i (x) L_j as an element of End(A) (x) End(A); membership in
// span(ar) (x) span(ar) is equivalent to its row and column spaces (as an
// n^2 x n^2 coefficient matrix) lying in span(ar). Field rings only.
bool check_r_in_ar_tensor_ar(const Algebra& a, const Tensor2& q,
                             const AROperatorAlgebra& ar);

}  // namespace nfrob
