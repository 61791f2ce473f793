#pragma once

#include "matrix.hpp"

namespace nfrob {

// Integer-lattice normal forms. Conventions:
//  - Hermite form is row-style: h = u * m with u unimodular, h in row echelon
//    with positive pivots and entries above each pivot reduced into [0, pivot).
//  - Smith form satisfies s = u * m * v, s diagonal with nonnegative entries
//    and d1 | d2 | ... ; this makes both forms unique, so tests can compare
//    bit-exactly.

struct HermiteResult {
  Matrix h;
  Matrix u;
};

HermiteResult hermite_normal_form(const Matrix& m);

struct SmithResult {
  Matrix u;
  Matrix s;
  Matrix v;
};

SmithResult smith_normal_form(const Matrix& m);

// Z-basis of {v : m*v = 0}, via a column-style Hermite reduction (row HNF of
// the transpose); the returned basis itself is HNF-canonical.
std::vector<Vec> integer_kernel_basis(const Matrix& m);

}  // namespace nfrob
