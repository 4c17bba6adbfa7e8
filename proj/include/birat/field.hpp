#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "birat/error.hpp"

namespace birat {

enum class FieldKind { Rationals, PrimeField };

// Exact coefficient domain: Q or F_p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  uint32_t characteristic = 0; // 0 for Q, p otherwise

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(uint32_t p); // validates primality and range
  static FieldSpec parse(const std::string& text); // "Q" or "Fp:<prime>"

  std::string str() const;
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && characteristic == o.characteristic;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

bool is_prime_u32(uint32_t n);

// Immutable exact scalar. Rationals are kept canonical by mpq (lowest terms,
// positive denominator); prime-field residues are kept in [0, p).
class Scalar {
public:
  Scalar() : spec_(FieldSpec::rationals()) {} // zero of Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long v);
  static Scalar of_mpz(const FieldSpec& f, const mpz_class& v);
  static Scalar of_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);

  const FieldSpec& field() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // DivisionByZero on o == 0
  Scalar neg() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rationals only: numerator/denominator access for content computations.
  const mpq_class& rational() const;
  uint32_t residue() const;

  // Sign of the rational value; residues report 0 or +1.
  int sgn() const;

  std::string str() const;

private:
  Scalar(FieldSpec f, mpq_class q) : spec_(f), rat_(std::move(q)) {}
  Scalar(FieldSpec f, uint32_t r) : spec_(f), res_(r) {}
  void check_same(const Scalar& o) const;

  FieldSpec spec_;
  mpq_class rat_;    // used when kind == Rationals
  uint32_t res_ = 0; // used when kind == PrimeField
};

// Residue arithmetic helpers (p < 2^31 so products fit in uint64).
uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p);
uint32_t fp_inv(uint32_t a, uint32_t p); // DivisionByZero on a == 0

} // namespace birat
