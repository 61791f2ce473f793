#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nfrob {

struct QuiverArrow {
  std::string name;
  std::string source;
  std::string target;
};

// Quiver with monomial relations. A relation is a composable sequence of
// arrow names, listed in composition order (left to right: "first a then b"),
// and declares that path to be zero.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<std::string>> relations;
};

constexpr std::size_t kDefaultPathBound = 10000;

// Bound path algebra: basis = vertex idempotents followed by all paths that
// contain no relation as a contiguous subpath, ordered by (length,
// lexicographic arrow-name sequence). Products concatenate left to right,
// p*q = "first p then q" when target(p) = source(q), else 0.
//
// Infinite-dimensionality is detected exactly (reachable cycle in the
// subpath-avoidance automaton) before any table is allocated; `bound` is a
// hard cap on the number of basis paths beyond that.
Algebra path_algebra(const Quiver& q, const Ring& ring,
                     std::size_t bound = kDefaultPathBound);

}  // namespace nfrob
