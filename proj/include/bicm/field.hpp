#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bicm {

// Coefficient field descriptor: the rationals (characteristic 0) or Z/p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return characteristic_ == 0; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  // "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint64_t p) : characteristic_(p) {}
  std::uint64_t characteristic_ = 0;
};

// Exact field element. Rationals are kept as reduced fractions with positive
// denominator; residues live in [0, p).
class FieldElement {
 public:
  FieldElement() = default;  // rational zero

  static FieldElement zero(const Field& field);
  static FieldElement one(const Field& field);
  static FieldElement from_integer(const Field& field, long value);
  static FieldElement from_integer(const Field& field, const mpz_class& value);
  static FieldElement from_rational(const Field& field, const mpq_class& value);

  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Rational value; for residues the representative in [0, p).
  mpq_class to_rational() const;

  // "-3/4", "17". Residues print as their representative.
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws InvalidArgument on zero

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same(const FieldElement& other) const;

  std::uint64_t modulus_ = 0;
  mpq_class value_;         // used when modulus_ == 0
  std::uint64_t residue_ = 0;  // used when modulus_ != 0
};

}  // namespace bicm
