#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicm/field.hpp"
#include "bicm/monomial.hpp"

namespace bicm {

// S = K[x1..xm, y1..yn], deg x_i = (1,0), deg y_j = (0,1). Variables are laid
// out x-block first: index i < m is x_{i+1}, index m + j is y_{j+1}.
class BigradedRing {
 public:
  BigradedRing(int m, int n, Field field = Field::rationals());

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return static_cast<std::size_t>(m_ + n_); }
  const Field& field() const noexcept { return field_; }

  bool is_x(std::size_t index) const noexcept { return index < static_cast<std::size_t>(m_); }
  std::string variable_name(std::size_t index) const;
  // Index of "x3"/"y1", or nullopt for an unknown name.
  std::optional<std::size_t> variable_index(std::string_view name) const;

  friend bool operator==(const BigradedRing&, const BigradedRing&) = default;

 private:
  int m_;
  int n_;
  Field field_;
};

struct BiDegree {
  std::uint32_t a = 0;  // x-degree
  std::uint32_t b = 0;  // y-degree

  friend bool operator==(const BiDegree&, const BiDegree&) = default;
  BiDegree operator+(const BiDegree& o) const { return {a + o.a, b + o.b}; }
};

BiDegree bidegree_of(const BigradedRing& ring, const Monomial& mono);

struct Term {
  Monomial monomial;
  FieldElement coefficient;
};

// Sparse polynomial with nonzero exact coefficients. Terms are kept sorted in
// descending grevlex order, which makes equality and printing canonical.
class Polynomial {
 public:
  explicit Polynomial(BigradedRing ring);

  static Polynomial constant(const BigradedRing& ring, const FieldElement& c);
  static Polynomial constant(const BigradedRing& ring, long c);
  static Polynomial variable(const BigradedRing& ring, std::size_t index);
  static Polynomial x(const BigradedRing& ring, int i);  // 1-based
  static Polynomial y(const BigradedRing& ring, int j);  // 1-based
  static Polynomial term(const BigradedRing& ring, Monomial mono, FieldElement c);
  // Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(const BigradedRing& ring, std::vector<Term> terms);

  const BigradedRing& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Leading term under grevlex; precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t total_degree() const noexcept;

  // Coefficient of `mono`, zero when absent.
  FieldElement coefficient(const Monomial& mono) const;

  bool is_bihomogeneous() const noexcept;
  // Throws ZeroPolynomial / NotBihomogeneous.
  BiDegree bidegree() const;

  bool uses_only_x() const noexcept;
  bool uses_only_y() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& mono) const;
  Polynomial pow(unsigned exponent) const;
  // Divides every coefficient by the leading coefficient.
  Polynomial monic() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Canonical text: descending grevlex, coefficients +-1 elided.
  std::string to_string() const;

  // Re-embeds into another ring with the same field by a variable map:
  // new_index[i] is where old variable i goes (must be used variables only).
  Polynomial remap(const BigradedRing& target, const std::vector<std::size_t>& new_index) const;

 private:
  Polynomial(BigradedRing ring, std::vector<Term> sorted_terms);
  void check_ring(const Polynomial& other) const;

  BigradedRing ring_;
  std::vector<Term> terms_;
};

// Convenience: `add`/`mul` mirrors of the operators.
inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

// Parses the infix syntax: integers or p/q coefficients, variables x1..xm and
// y1..yn, '*', '^' with nonnegative integer exponents, '+', '-', parentheses.
// Errors are ParseError positioned at `line` and `column_offset + index + 1`.
Polynomial parse_polynomial(const BigradedRing& ring, std::string_view text, int line = 1,
                            int column_offset = 0);

// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const BigradedRing& ring, std::string_view text,
                                              int line = 1, int column_offset = 0);

}  // namespace bicm
