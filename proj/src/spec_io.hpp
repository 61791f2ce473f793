#pragma once

#include <string>

#include "quiver.hpp"
#include "tensor.hpp"

namespace nfrob {

// Algebra description files: UTF-8 JSON with every scalar as a string, e.g.
//   {"scalars": "Q", "algebra": {"kind": "structure_constants", "dim": 2,
//    "unit": ["1", "0"], "table": [[["0","0"],...], ...]}}
//   {"scalars": {"Fp": 5}, "algebra": {"kind": "quiver", "vertices": [...],
//    "arrows": [{"name": "a", "src": "1", "tgt": "2"}], "relations": [["a","b"]]}}
// table[i][j][k] is the coefficient of e_k in e_i * e_j.

// Parses and fully validates (associativity, unit, primality of p). Throws
// Error with code ParseError / ValidationError / NotPrime / InfiniteDimensional.
// The validate command parses with check_table = false and reports violations
// instead of throwing.
Algebra parse_spec(const std::string& json_text, bool check_table = true);

Algebra parse_spec_file(const std::string& path);

std::string read_file(const std::string& path);

Ring parse_ring(const std::string& json_text);

// Scalar matrices and tensors as nested string arrays; parse_* are exact
// inverses of render_*.
std::string render_vec(const Vec& v);
std::string render_matrix(const Matrix& m);
Vec parse_vec(const Ring& ring, const std::string& json_text);
Tensor2 parse_tensor2(const Ring& ring, const std::string& json_text);

// Comma-separated coefficient list, the CLI's --epsilon format.
Vec parse_coeff_list(const Ring& ring, const std::string& text, std::size_t n);

// FNV-1a 64-bit content digest, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace nfrob
