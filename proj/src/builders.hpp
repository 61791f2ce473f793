#pragma once

#include "algebra.hpp"

namespace nfrob {

// Stock algebras used throughout the test corpus. Basis orders are fixed:
// elementary matrices row-major, group elements g^0..g^{m-1}, monomials
// 1, x, ..., x^{m-1}, orthogonal idempotents e1..em.

// M_m(k), dimension m^2.
Algebra matrix_algebra(std::size_t m, const Ring& ring);

// Group algebra k[Z/m].
Algebra cyclic_group_algebra(std::size_t m, const Ring& ring);

// k[x]/(x^m).
Algebra truncated_poly(std::size_t m, const Ring& ring);

// k^m with componentwise product.
Algebra product_ring(std::size_t m, const Ring& ring);

}  // namespace nfrob
