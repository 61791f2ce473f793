#pragma once

#include <cstdint>
#include <optional>

#include "linalg.hpp"
#include "tensor.hpp"

namespace nfrob {

// The Frobenius space of A is realized as C_{A(x)A}(A), the space of
// A-central elements Q of A(x)A (a*Q = Q*a for all a, multiplication on the
// outer slots); evaluation at 1 identifies it with the space of nearly
// Frobenius coproducts. Everything here is exact; there are no tolerances.

// True iff L_p * T = T * rho_p^T for every basis index p.
bool is_central(const Algebra& a, const Tensor2& q);

struct FrobeniusSpace {
  std::vector<Tensor2> generators;    // canonical echelon basis
  std::vector<mpz_class> snf_diagonal;  // ring Z only: elementary divisors of
                                        // the defining centrality system
};

// Canonical basis of the kernel of the stacked centrality system
// {L_p T - T rho_p^T = 0 : p < n} in the n^2 coefficients of T. Over Z the
// kernel lattice is computed by Hermite reduction and the elementary divisors
// of the system are reported alongside.
FrobeniusSpace central_basis(const Algebra& a);

// dim E_A over a field; over Z, the rank of the kernel lattice.
std::size_t frobdim(const Algebra& a);

// Delta(x) = x * q for the coproduct determined by the central element q
// (equals q * x by centrality). Throws NotCentral if q is not central.
Tensor2 coproduct_from_q(const Algebra& a, const Tensor2& q, const Vec& x);

// (a * Delta)(1) = (1 (x) a) Delta(1); the untwisted left action on E_A.
Tensor2 ast_action(const Algebra& a, const Vec& a_elt, const Tensor2& q);

// Trace candidate epsilon, stored as the coefficient vector epsilon(e_i).
struct FrobeniusData {
  Vec epsilon;
  Matrix gram;      // G(i,j) = epsilon(e_i e_j)
  Matrix dual;      // D = G^{-1}; e_i^# = sum_m D(i,m) e_m
  Tensor2 q0;       // Frobenius coproduct at 1; coefficient matrix = D
  Matrix nakayama;  // N = G^{-1} G^T; nu(e_i) = sum_m N(m,i) e_m
};

Matrix gram_matrix(const Algebra& a, const Vec& epsilon);

// Builds and validates the full Frobenius structure for a nondegenerate
// epsilon: dual basis, coproduct at 1, Nakayama automorphism. All defining
// relations are checked exactly before returning.
FrobeniusData frobenius_data(const Algebra& a, const Vec& epsilon);

enum class FrobeniusVerdict {
  CertifiedFrobenius,     // explicit epsilon with det G != 0
  CertifiedNotFrobenius,  // deterministic expansion proved det G == 0
  ProbablyNotFrobenius,   // all randomized trials failed
};

struct FrobeniusSearchConfig {
  unsigned trials = 32;
  std::uint64_t seed = 0xF506;
  std::uint64_t height = std::uint64_t{1} << 16;  // samples per coefficient
  bool deterministic = false;
};

struct FrobeniusSearchResult {
  FrobeniusVerdict verdict;
  std::optional<Vec> epsilon;  // witness when CertifiedFrobenius
  mpq_class failure_bound;     // Schwartz-Zippel bound for the probabilistic
                               // verdict, 0 for certified ones
};

// Nondegeneracy search for the bilinear form B(x,y) = epsilon(xy): randomized
// polynomial identity testing on det G(epsilon) (degree <= n), with an exact
// grid expansion for n <= 8 in deterministic mode. Field rings only; over Z
// use check_frobenius_form with an explicit epsilon.
FrobeniusSearchResult find_frobenius_form(const Algebra& a,
                                          const FrobeniusSearchConfig& cfg = {});

// Fields: det G != 0. Z: |det G| = 1 (A is self-dual iff G is unimodular).
bool check_frobenius_form(const Algebra& a, const Vec& epsilon);

// Duality route for the coproduct: Delta = (lambda_r^{-1} (x) lambda_r^{-1})
// after mu^* after lambda_r, with mu(u (x) v) = v u. Must agree with
// coproduct_from_q(a, q0, x) everywhere.
Tensor2 coproduct_via_duality(const Algebra& a, const Vec& epsilon, const Vec& x);

// (epsilon (x) id) q = 1 = (id (x) epsilon) q, checked exactly.
bool counit_check(const Algebra& a, const Vec& epsilon, const Tensor2& q);

// (a * Delta)(1) = (1 (x) nu^{-1}(a)) Delta(1); the Nakayama-twisted action.
Tensor2 star_action(const Algebra& a, const FrobeniusData& frob,
                    const Vec& a_elt, const Tensor2& q);

// The unique a with q_target = star_action(a, q0), in closed form
// a = nu(sum_i epsilon(e_i) b_i) where q_target = sum_i e_i (x) b_i;
// verified by re-applying the action before returning.
Vec solve_star_coefficient(const Algebra& a, const FrobeniusData& frob,
                           const Tensor2& q_target);

struct TheoremAReport {
  std::size_t dim = 0;
  std::size_t frobenius_dim = 0;
  bool frobdim_equals_dim = false;
  bool star_orbit_independent = false;  // {e_i * q0} linearly independent
  bool all_generators_reached = false;  // every generator is a * q0 for some a

  bool ok() const {
    return frobdim_equals_dim && star_orbit_independent &&
           all_generators_reached;
  }
};

// Exact verification that E_A is the free rank-one module generated by the
// Frobenius coproduct under the twisted action.
TheoremAReport verify_theorem_a(const Algebra& a, const FrobeniusData& frob);

// eta(f) = (id (x) f)(q); coefficient matrix T * F^T.
Tensor2 eta_map(const Algebra& a, const Tensor2& q, const Matrix& f);

}  // namespace nfrob
