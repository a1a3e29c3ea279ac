#include "bicm/field.hpp"

#include "bicm/error.hpp"

namespace bicm {

namespace {

bool is_prime(std::uint64_t p) {
  mpz_class z;
  mpz_set_ui(z.get_mpz_t(), p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_class modulus;
  mpz_set_ui(modulus.get_mpz_t(), p);
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotBihomogeneous: return "NotBihomogeneous";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NoRegularForm: return "NoRegularForm";
    case ErrorKind::UndecidableByRules: return "UndecidableByRules";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::UnsupportedIdealClass: return "UnsupportedIdealClass";
    case ErrorKind::CertificateVerificationFailed: return "CertificateVerificationFailed";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Semantic: return "SemanticError";
  }
  return "Unknown";
}

Field Field::prime(std::uint64_t p) {
  // Residues are multiplied through 128-bit intermediates.
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument,
                "field characteristic must be a prime below 2^62, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

FieldElement FieldElement::zero(const Field& field) {
  FieldElement e;
  e.modulus_ = field.characteristic();
  return e;
}

FieldElement FieldElement::one(const Field& field) { return from_integer(field, 1); }

FieldElement FieldElement::from_integer(const Field& field, long value) {
  return from_integer(field, mpz_class(value));
}

FieldElement FieldElement::from_integer(const Field& field, const mpz_class& value) {
  FieldElement e = zero(field);
  if (e.modulus_ == 0) {
    e.value_ = mpq_class(value);
  } else {
    e.residue_ = reduce(value, e.modulus_);
  }
  return e;
}

FieldElement FieldElement::from_rational(const Field& field, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (field.is_rational()) {
    FieldElement e;
    e.value_ = q;
    return e;
  }
  FieldElement num = from_integer(field, q.get_num());
  FieldElement den = from_integer(field, q.get_den());
  if (den.is_zero()) {
    throw Error(ErrorKind::InvalidArgument,
                "denominator vanishes in " + field.name());
  }
  return num / den;
}

Field FieldElement::field() const {
  return modulus_ == 0 ? Field::rationals() : Field(modulus_);
}

bool FieldElement::is_zero() const noexcept {
  return modulus_ == 0 ? sgn(value_) == 0 : residue_ == 0;
}

bool FieldElement::is_one() const noexcept {
  return modulus_ == 0 ? value_ == 1 : residue_ == 1;
}

mpq_class FieldElement::to_rational() const {
  if (modulus_ == 0) return value_;
  mpz_class r;
  mpz_set_ui(r.get_mpz_t(), residue_);
  return mpq_class(r);
}

std::string FieldElement::to_string() const {
  if (modulus_ == 0) return value_.get_str();
  return std::to_string(residue_);
}

void FieldElement::check_same(const FieldElement& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorKind::RingMismatch, "field elements from different fields");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (modulus_ == 0) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = modulus_ - residue_;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  FieldElement r = *this;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
  } else {
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  if (modulus_ == 0) {
    value_ += rhs.value_;
  } else {
    residue_ += rhs.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  if (modulus_ == 0) {
    value_ -= rhs.value_;
  } else {
    residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_
                                        : residue_ + (modulus_ - rhs.residue_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  if (modulus_ == 0) {
    value_ *= rhs.value_;
  } else {
    residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

}  // namespace bicm
