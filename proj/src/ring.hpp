#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace nfrob {

enum class RingKind : std::uint8_t { Rationals, PrimeField, Integers };

// Scalar-ring descriptor. All arithmetic in the library is exact; the three
// supported rings are Q, F_p (p prime, p < 2^31) and Z.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring prime_field(std::int64_t p);

  RingKind kind() const { return kind_; }
  std::int64_t modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }

  bool operator==(const Ring&) const = default;

  std::string name() const {
    switch (kind_) {
      case RingKind::Rationals: return "Q";
      case RingKind::PrimeField: return "F" + std::to_string(p_);
      case RingKind::Integers: return "Z";
    }
    return "?";
  }

 private:
  Ring(RingKind kind, std::int64_t p) : kind_(kind), p_(p) {}

  RingKind kind_;
  std::int64_t p_;
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline Ring Ring::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::LimitExceeded, "prime modulus must be < 2^31");
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime,
                std::to_string(p) + " is not a prime modulus");
  return Ring(RingKind::PrimeField, p);
}

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b))
    throw Error(ErrorCode::WrongRing,
                "mixed scalar rings " + a.name() + " and " + b.name());
}

}  // namespace nfrob
