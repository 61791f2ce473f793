#include "builders.hpp"

namespace nfrob {

namespace {

void require_positive(std::size_t m) {
  if (m == 0)
    throw Error(ErrorCode::InvalidArgument, "builder parameter must be >= 1");
}

}  // namespace

Algebra matrix_algebra(std::size_t m, const Ring& ring) {
  require_positive(m);
  const std::size_t n = m * m;
  std::vector<Scalar> table(n * n * n, Scalar::zero(ring));
  const Scalar one = Scalar::one(ring);
  // E_{ab} E_{cd} = [b == c] E_{ad}; basis index of E_{ab} is a*m + b
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t d = 0; d < m; ++d) {
        std::size_t i = a * m + b, j = b * m + d, k = a * m + d;
        table[(i * n + j) * n + k] = one;
      }
  Vec unit = zero_vec(ring, n);
  for (std::size_t a = 0; a < m; ++a) unit[a * m + a] = one;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  return Algebra(ring, n, std::move(table), std::move(unit), std::move(labels));
}

Algebra cyclic_group_algebra(std::size_t m, const Ring& ring) {
  require_positive(m);
  std::vector<Scalar> table(m * m * m, Scalar::zero(ring));
  const Scalar one = Scalar::one(ring);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[(a * m + b) * m + (a + b) % m] = one;
  Vec unit = basis_vec(ring, m, 0);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("g^" + std::to_string(a));
  return Algebra(ring, m, std::move(table), std::move(unit), std::move(labels));
}

Algebra truncated_poly(std::size_t m, const Ring& ring) {
  require_positive(m);
  std::vector<Scalar> table(m * m * m, Scalar::zero(ring));
  const Scalar one = Scalar::one(ring);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b + a < m; ++b)
      table[(a * m + b) * m + (a + b)] = one;
  Vec unit = basis_vec(ring, m, 0);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    labels.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
  return Algebra(ring, m, std::move(table), std::move(unit), std::move(labels));
}

Algebra product_ring(std::size_t m, const Ring& ring) {
  require_positive(m);
  std::vector<Scalar> table(m * m * m, Scalar::zero(ring));
  const Scalar one = Scalar::one(ring);
  for (std::size_t a = 0; a < m; ++a) table[(a * m + a) * m + a] = one;
  Vec unit(m, one);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("e" + std::to_string(a + 1));
  return Algebra(ring, m, std::move(table), std::move(unit), std::move(labels));
}

}  // namespace nfrob
