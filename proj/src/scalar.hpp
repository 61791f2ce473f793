#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ring.hpp"

namespace nfrob {

// Exact scalar: mpq over Q, canonical residue in [0, p) over F_p, mpz over Z.
// Rationals are kept in lowest terms with positive denominator (GMP canonical
// form); every operation checks that both operands live in the same ring.
class Scalar {
 public:
  Scalar() : ring_(Ring::rationals()), v_(mpq_class()) {}

  static Scalar zero(const Ring& ring) { return of(ring, 0); }
  static Scalar one(const Ring& ring) { return of(ring, 1); }

  static Scalar of(const Ring& ring, long value) {
    switch (ring.kind()) {
      case RingKind::Rationals: return Scalar(ring, mpq_class(value));
      case RingKind::Integers: return Scalar(ring, mpz_class(value));
      case RingKind::PrimeField: {
        std::int64_t p = ring.modulus();
        return Scalar(ring, ((value % p) + p) % p);
      }
    }
    throw Error(ErrorCode::Internal, "bad ring kind");
  }

  static Scalar from_mpz(const Ring& ring, const mpz_class& value) {
    switch (ring.kind()) {
      case RingKind::Rationals: return Scalar(ring, mpq_class(value));
      case RingKind::Integers: return Scalar(ring, value);
      case RingKind::PrimeField: {
        mpz_class r = value % ring.modulus();
        std::int64_t v = r.get_si();
        if (v < 0) v += ring.modulus();
        return Scalar(ring, v);
      }
    }
    throw Error(ErrorCode::Internal, "bad ring kind");
  }

  static Scalar from_mpq(const Ring& ring, const mpq_class& value) {
    if (ring.kind() == RingKind::Rationals) {
      mpq_class c = value;
      c.canonicalize();
      return Scalar(ring, c);
    }
    if (value.get_den() != 1)
      throw Error(ErrorCode::WrongRing,
                  "non-integral value in ring " + ring.name());
    return from_mpz(ring, value.get_num());
  }

  // Accepts "a" in any ring and "a/b" over Q only.
  static Scalar parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }

  bool is_zero() const {
    switch (ring_.kind()) {
      case RingKind::Rationals: return sgn(rat()) == 0;
      case RingKind::Integers: return sgn(intval()) == 0;
      case RingKind::PrimeField: return res() == 0;
    }
    return false;
  }

  bool is_one() const { return *this == one(ring_); }

  // True when the scalar has a multiplicative inverse in its ring.
  bool is_unit() const {
    if (ring_.kind() == RingKind::Integers)
      return intval() == 1 || intval() == -1;
    return !is_zero();
  }

  Scalar& operator+=(const Scalar& o) {
    require_same_ring(ring_, o.ring_);
    switch (ring_.kind()) {
      case RingKind::Rationals: rat() += o.rat(); break;
      case RingKind::Integers: intval() += o.intval(); break;
      case RingKind::PrimeField: res() = (res() + o.res()) % ring_.modulus(); break;
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    require_same_ring(ring_, o.ring_);
    switch (ring_.kind()) {
      case RingKind::Rationals: rat() -= o.rat(); break;
      case RingKind::Integers: intval() -= o.intval(); break;
      case RingKind::PrimeField: {
        std::int64_t p = ring_.modulus();
        res() = (res() - o.res() + p) % p;
        break;
      }
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    require_same_ring(ring_, o.ring_);
    switch (ring_.kind()) {
      case RingKind::Rationals: rat() *= o.rat(); break;
      case RingKind::Integers: intval() *= o.intval(); break;
      case RingKind::PrimeField: res() = (res() * o.res()) % ring_.modulus(); break;
    }
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  Scalar operator-() const {
    Scalar r = *this;
    switch (ring_.kind()) {
      case RingKind::Rationals: r.rat() = -r.rat(); break;
      case RingKind::Integers: r.intval() = -r.intval(); break;
      case RingKind::PrimeField:
        if (r.res() != 0) r.res() = ring_.modulus() - r.res();
        break;
    }
    return r;
  }

  Scalar inverse() const {
    switch (ring_.kind()) {
      case RingKind::Rationals:
        if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
        return Scalar(ring_, mpq_class(1) / rat());
      case RingKind::Integers:
        if (!is_unit())
          throw Error(ErrorCode::WrongRing,
                      "only units +-1 are invertible over Z");
        return *this;
      case RingKind::PrimeField: {
        if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
        return Scalar(ring_, fp_inverse(res(), ring_.modulus()));
      }
    }
    throw Error(ErrorCode::Internal, "bad ring kind");
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const {
    if (!(ring_ == o.ring_)) return false;
    switch (ring_.kind()) {
      case RingKind::Rationals: return rat() == o.rat();
      case RingKind::Integers: return intval() == o.intval();
      case RingKind::PrimeField: return res() == o.res();
    }
    return false;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact value as a rational number (F_p residues map to [0, p)).
  mpq_class to_mpq() const {
    switch (ring_.kind()) {
      case RingKind::Rationals: return rat();
      case RingKind::Integers: return mpq_class(intval());
      case RingKind::PrimeField: return mpq_class(static_cast<long>(res()));
    }
    throw Error(ErrorCode::Internal, "bad ring kind");
  }

  mpz_class to_mpz() const {
    if (ring_.kind() == RingKind::Integers) return intval();
    mpq_class q = to_mpq();
    if (q.get_den() != 1)
      throw Error(ErrorCode::WrongRing, "scalar is not an integer");
    return q.get_num();
  }

  std::string str() const {
    switch (ring_.kind()) {
      case RingKind::Rationals: return rat().get_str();
      case RingKind::Integers: return intval().get_str();
      case RingKind::PrimeField: return std::to_string(res());
    }
    return "?";
  }

 private:
  Scalar(const Ring& ring, mpq_class v) : ring_(ring), v_(std::move(v)) {}
  Scalar(const Ring& ring, mpz_class v) : ring_(ring), v_(std::move(v)) {}
  Scalar(const Ring& ring, std::int64_t v) : ring_(ring), v_(v) {}

  mpq_class& rat() { return std::get<mpq_class>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  mpz_class& intval() { return std::get<mpz_class>(v_); }
  const mpz_class& intval() const { return std::get<mpz_class>(v_); }
  std::int64_t& res() { return std::get<std::int64_t>(v_); }
  const std::int64_t& res() const { return std::get<std::int64_t>(v_); }

  static std::int64_t fp_inverse(std::int64_t a, std::int64_t p) {
    // extended euclid, a in [1, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return ((t % p) + p) % p;
  }

  Ring ring_;
  std::variant<mpq_class, mpz_class, std::int64_t> v_;
};

inline Scalar Scalar::parse(const Ring& ring, std::string_view text) {
  auto parse_mpz = [](std::string_view s) -> mpz_class {
    if (s.empty())
      throw Error(ErrorCode::ParseError, "empty scalar literal");
    try {
      return mpz_class(std::string(s), 10);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError,
                  "bad integer literal '" + std::string(s) + "'");
    }
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpz(ring, parse_mpz(text));
  if (ring.kind() != RingKind::Rationals)
    throw Error(ErrorCode::ParseError,
                "fraction literal '" + std::string(text) +
                    "' is not valid in ring " + ring.name());
  mpz_class num = parse_mpz(text.substr(0, slash));
  mpz_class den = parse_mpz(text.substr(slash + 1));
  if (sgn(den) == 0)
    throw Error(ErrorCode::ParseError, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(ring, q);
}

}  // namespace nfrob
