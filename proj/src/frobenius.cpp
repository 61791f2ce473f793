#include "frobenius.hpp"

#include <random>

#include "normal_form.hpp"

namespace nfrob {

namespace {

void require_central(const Algebra& a, const Tensor2& q, const char* op) {
  if (!is_central(a, q))
    throw Error(ErrorCode::NotCentral,
                std::string(op) + " requires an A-central tensor");
}

// 64-bit splitmix; per-trial generators derive from (seed, trial) so trials
// are independent of evaluation order.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

bool is_central(const Algebra& a, const Tensor2& q) {
  const std::size_t n = a.dim();
  if (q.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "tensor shape mismatch");
  for (std::size_t p = 0; p < n; ++p) {
    Matrix lhs = left_mult_matrix(a, p) * q.coeffs;
    Matrix rhs = q.coeffs * right_mult_matrix(a, p).transpose();
    if (lhs != rhs) return false;
  }
  return true;
}

FrobeniusSpace central_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  const Ring& ring = a.ring();
  // Stacked system: row ((p, u), v), column (i, j); coefficient of T(i,j) in
  // (L_p T - T rho_p^T)(u,v) is c(p,i,u)[j==v] - [u==i]c(j,p,v).
  Matrix sys(ring, n * n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [u, cu] : a.product_row(p, i))
        for (std::size_t v = 0; v < n; ++v)
          sys.at((p * n + u) * n + v, i * n + v) += cu;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [v, cv] : a.product_row(j, p))
        for (std::size_t u = 0; u < n; ++u)
          sys.at((p * n + u) * n + v, u * n + j) -= cv;
  }

  FrobeniusSpace space;
  std::vector<Vec> kernel;
  if (ring.kind() == RingKind::Integers) {
    kernel = integer_kernel_basis(sys);
    SmithResult snf = smith_normal_form(sys);
    for (std::size_t t = 0; t < std::min(snf.s.rows(), snf.s.cols()); ++t) {
      mpz_class d = snf.s.at(t, t).to_mpz();
      if (d == 0) break;
      space.snf_diagonal.push_back(d);
    }
  } else {
    kernel = kernel_basis(sys);
  }
  for (const Vec& v : kernel) {
    Tensor2 t(ring, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = v[i * n + j];
    space.generators.push_back(std::move(t));
  }
  return space;
}

std::size_t frobdim(const Algebra& a) {
  return central_basis(a).generators.size();
}

Tensor2 coproduct_from_q(const Algebra& a, const Tensor2& q, const Vec& x) {
  require_central(a, q, "coproduct_from_q");
  return act_left(a, x, q);
}

Tensor2 ast_action(const Algebra& a, const Vec& a_elt, const Tensor2& q) {
  require_central(a, q, "ast_action");
  // sum x_i (x) a y_i : left multiplication on the second slot
  Tensor2 r(q.coeffs * left_mult_operator(a, a_elt).transpose());
  if (!is_central(a, r))
    throw Error(ErrorCode::Internal, "ast_action produced a non-central tensor");
  return r;
}

Matrix gram_matrix(const Algebra& a, const Vec& epsilon) {
  const std::size_t n = a.dim();
  if (epsilon.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "epsilon length mismatch");
  Matrix g(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, ck] : a.product_row(i, j)) {
        if (epsilon[k].is_zero()) continue;
        g.at(i, j) += ck * epsilon[k];
      }
  return g;
}

FrobeniusData frobenius_data(const Algebra& a, const Vec& epsilon) {
  const std::size_t n = a.dim();
  Matrix g = gram_matrix(a, epsilon);
  Matrix d = inverse(g);  // Singular over fields, NotUnimodular over Z
  Tensor2 q0(d);
  Matrix nakayama = d * g.transpose();

  // defining relation B(x, y) = B(y, nu(x)) on all basis pairs
  if (g.transpose() != g * nakayama)
    throw Error(ErrorCode::Internal, "Nakayama defining relation failed");
  // nu is a unital algebra automorphism
  Vec unit_image = nakayama.mul_vec(a.unit());
  if (unit_image != a.unit())
    throw Error(ErrorCode::Internal, "Nakayama map does not fix the unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = nakayama.mul_vec(mul(a, a.basis_element(i), a.basis_element(j)));
      Vec rhs = mul(a, nakayama.col(i), nakayama.col(j));
      if (lhs != rhs)
        throw Error(ErrorCode::Internal, "Nakayama map is not multiplicative");
    }
  if (!is_central(a, q0))
    throw Error(ErrorCode::Internal, "Frobenius coproduct is not central");
  if (!counit_check(a, epsilon, q0))
    throw Error(ErrorCode::Internal, "counit normalization failed");
  return FrobeniusData{epsilon, std::move(g), std::move(d), std::move(q0),
                       std::move(nakayama)};
}

namespace {

// Odometer over value-set S^n with early exit; S has n+1 points (or all of
// F_p when p <= n), enough to detect any nonzero polynomial of per-variable
// degree <= n.
FrobeniusSearchResult deterministic_search(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > 8)
    throw Error(ErrorCode::DeterministicTooLarge,
                "deterministic certification is capped at dimension 8");
  std::size_t values = n + 1;
  if (a.ring().kind() == RingKind::PrimeField)
    values = std::min<std::size_t>(values, a.ring().modulus());
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Vec eps;
    eps.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      eps.push_back(Scalar::of(a.ring(), static_cast<long>(idx[i])));
    if (!determinant(gram_matrix(a, eps)).is_zero())
      return FrobeniusSearchResult{FrobeniusVerdict::CertifiedFrobenius,
                                   std::move(eps), mpq_class(0)};
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == values) idx[pos++] = 0;
    if (pos == n) break;
  }
  return FrobeniusSearchResult{FrobeniusVerdict::CertifiedNotFrobenius,
                               std::nullopt, mpq_class(0)};
}

}  // namespace

FrobeniusSearchResult find_frobenius_form(const Algebra& a,
                                          const FrobeniusSearchConfig& cfg) {
  if (!a.ring().is_field())
    throw Error(ErrorCode::WrongRing,
                "nondegeneracy search needs a field; over Z supply epsilon to "
                "check_frobenius_form");
  if (cfg.deterministic) return deterministic_search(a);

  const std::size_t n = a.dim();
  std::uint64_t samples = cfg.height;
  if (a.ring().kind() == RingKind::PrimeField)
    samples = std::min<std::uint64_t>(
        samples, static_cast<std::uint64_t>(a.ring().modulus()));
  if (samples < 2)
    throw Error(ErrorCode::InvalidArgument, "sample height must be >= 2");
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x51ED270B * std::uint64_t{trial + 1})));
    Vec eps;
    eps.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      eps.push_back(Scalar::of(a.ring(), static_cast<long>(rng() % samples)));
    if (!determinant(gram_matrix(a, eps)).is_zero())
      return FrobeniusSearchResult{FrobeniusVerdict::CertifiedFrobenius,
                                   std::move(eps), mpq_class(0)};
  }
  // det G(eps) has total degree <= n; per-trial failure probability <= n/|S|
  mpq_class bound(1);
  mpq_class per_trial(static_cast<unsigned long>(n),
                      static_cast<unsigned long>(samples));
  per_trial.canonicalize();
  if (per_trial > 1) per_trial = 1;
  for (unsigned t = 0; t < cfg.trials; ++t) bound *= per_trial;
  return FrobeniusSearchResult{FrobeniusVerdict::ProbablyNotFrobenius,
                               std::nullopt, bound};
}

bool check_frobenius_form(const Algebra& a, const Vec& epsilon) {
  Scalar det = determinant(gram_matrix(a, epsilon));
  if (a.ring().kind() == RingKind::Integers)
    return det.to_mpz() == 1 || det.to_mpz() == -1;
  return !det.is_zero();
}

Tensor2 coproduct_via_duality(const Algebra& a, const Vec& epsilon,
                              const Vec& x) {
  const std::size_t n = a.dim();
  if (x.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "element length mismatch");
  Matrix g = gram_matrix(a, epsilon);
  Matrix gt = g.transpose();
  // lambda_r(x) = G^T x as a functional in the e_i^* coordinates
  Vec phi = gt.mul_vec(x);
  // mu^*(phi)(e_i (x) e_j) = phi(e_j e_i)
  Matrix psi(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, ck] : a.product_row(j, i)) {
        if (phi[k].is_zero()) continue;
        psi.at(i, j) += ck * phi[k];
      }
  // pull back along lambda_r^{-1} (x) lambda_r^{-1}
  Matrix gt_inv = inverse(gt);
  return Tensor2(gt_inv * psi * gt_inv.transpose());
}

bool counit_check(const Algebra& a, const Vec& epsilon, const Tensor2& q) {
  const std::size_t n = a.dim();
  if (epsilon.size() != n || q.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
  Vec left = zero_vec(a.ring(), n);   // (epsilon (x) id) q
  Vec right = zero_vec(a.ring(), n);  // (id (x) epsilon) q
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& t = q.at(i, j);
      if (t.is_zero()) continue;
      left[j] += epsilon[i] * t;
      right[i] += epsilon[j] * t;
    }
  return left == a.unit() && right == a.unit();
}

Tensor2 star_action(const Algebra& a, const FrobeniusData& frob,
                    const Vec& a_elt, const Tensor2& q) {
  require_central(a, q, "star_action");
  Vec twisted = inverse(frob.nakayama).mul_vec(a_elt);
  Tensor2 r(q.coeffs * left_mult_operator(a, twisted).transpose());
  if (!is_central(a, r))
    throw Error(ErrorCode::Internal, "star_action produced a non-central tensor");
  return r;
}

Vec solve_star_coefficient(const Algebra& a, const FrobeniusData& frob,
                           const Tensor2& q_target) {
  require_central(a, q_target, "solve_star_coefficient");
  const std::size_t n = a.dim();
  // Write q_target = sum_i e_i (x) b_i with b_i the i-th coefficient row.
  // In the star-orbit b_i = nu^{-1}(a) e_i^#, so contracting with epsilon
  // recovers nu^{-1}(a) = sum_i epsilon(e_i) b_i.
  Vec s = zero_vec(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (frob.epsilon[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (q_target.at(i, j).is_zero()) continue;
      s[j] += frob.epsilon[i] * q_target.at(i, j);
    }
  }
  Vec result = frob.nakayama.mul_vec(s);
  if (star_action(a, frob, result, frob.q0) != q_target)
    throw Error(ErrorCode::NoSolution,
                "central element is not in the star-orbit of q0");
  return result;
}

TheoremAReport verify_theorem_a(const Algebra& a, const FrobeniusData& frob) {
  TheoremAReport report;
  const std::size_t n = a.dim();
  report.dim = n;
  FrobeniusSpace space = central_basis(a);
  report.frobenius_dim = space.generators.size();
  report.frobdim_equals_dim = report.frobenius_dim == n;

  Matrix orbit(a.ring(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 t = star_action(a, frob, a.basis_element(i), frob.q0);
    for (std::size_t k = 0; k < n * n; ++k) orbit.at(i, k) = t.coeffs.entries()[k];
  }
  report.star_orbit_independent = rank(orbit) == n;

  report.all_generators_reached = true;
  for (const Tensor2& g : space.generators) {
    try {
      solve_star_coefficient(a, frob, g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSolution) throw;
      report.all_generators_reached = false;
    }
  }
  return report;
}

Tensor2 eta_map(const Algebra& a, const Tensor2& q, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim() || q.dim() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
  return Tensor2(q.coeffs * f.transpose());
}

}  // namespace nfrob
