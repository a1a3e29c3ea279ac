#include "doctest.h"

#include "bicm/error.hpp"
#include "bicm/polynomial.hpp"
#include "support.hpp"

using namespace bicm;
using bicm::testing::Generator;
using bicm::testing::poly;

TEST_CASE("field elements are canonical") {
  const Field qq = Field::rationals();
  auto a = FieldElement::from_rational(qq, mpq_class(6, -4));
  CHECK(a.to_string() == "-3/2");
  CHECK((a + FieldElement::from_rational(qq, mpq_class(3, 2))).is_zero());
  CHECK((a * a.inverse()).is_one());

  const Field gf = Field::prime(65521);
  auto b = FieldElement::from_integer(gf, -1);
  CHECK(b.to_string() == "65520");
  CHECK((b * b).is_one());
  auto half = FieldElement::from_rational(gf, mpq_class(1, 2));
  CHECK((half + half).is_one());
  CHECK_THROWS_AS(Field::prime(65520), Error);
  CHECK_THROWS_AS(FieldElement::zero(gf).inverse(), Error);
}

TEST_CASE("ring construction and variable names") {
  const BigradedRing ring(2, 3);
  CHECK(ring.nvars() == 5);
  CHECK(ring.variable_name(0) == "x1");
  CHECK(ring.variable_name(2) == "y1");
  CHECK(ring.variable_index("y3") == 4u);
  CHECK_FALSE(ring.variable_index("x3").has_value());
  CHECK_FALSE(ring.variable_index("y0").has_value());
  CHECK_THROWS_AS(BigradedRing(2, 0), Error);
  CHECK_NOTHROW(BigradedRing(0, 2));
}

TEST_CASE("add") {
  const BigradedRing ring(2, 2);
  CHECK((poly(ring, "x1*y1") + poly(ring, "-x1*y1")).is_zero());
  CHECK((poly(ring, "x1*y1") + poly(ring, "x2*y2")) == poly(ring, "x1*y1 + x2*y2"));
  const auto g = poly(ring, "3*x1^2 - y2 + 1/2");
  CHECK((Polynomial(ring) + g) == g);
  CHECK_THROWS_AS(g + poly(BigradedRing(2, 3), "y1"), Error);
}

TEST_CASE("mul") {
  const BigradedRing ring(2, 2);
  CHECK(poly(ring, "(x1 + x2)") * poly(ring, "y1") == poly(ring, "x1*y1 + x2*y1"));
  const auto g = poly(ring, "x1*y2 - 7*y1^3");
  CHECK(Polynomial::constant(ring, 1) * g == g);
  CHECK((poly(ring, "x1 - y1") * poly(ring, "x1 + y1")) == poly(ring, "x1^2 - y1^2"));
}

TEST_CASE("bidegree") {
  const BigradedRing ring(2, 2);
  CHECK(poly(ring, "x1*y1 + x2*y2").bidegree() == BiDegree{1, 1});
  CHECK(poly(ring, "5").bidegree() == BiDegree{0, 0});
  try {
    (void)poly(ring, "x1 + y1").bidegree();
    FAIL("expected NotBihomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBihomogeneous);
  }
  try {
    (void)Polynomial(ring).bidegree();
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("canonical printing") {
  const BigradedRing ring(2, 2);
  CHECK(poly(ring, "x2*y2 + x1*y1").to_string() == "x1*y1 + x2*y2");
  CHECK(poly(ring, "-y2 + 1/2 - 3*x1^2*y1").to_string() == "-3*x1^2*y1 - y2 + 1/2");
  CHECK(Polynomial(ring).to_string() == "0");
  CHECK(poly(ring, "(x1+y1)^2").to_string() == "x1^2 + 2*x1*y1 + y1^2");
  CHECK(poly(ring, "-1").to_string() == "-1");
}

TEST_CASE("parse errors carry positions") {
  const BigradedRing ring(2, 2);
  try {
    (void)parse_polynomial(ring, "x1 + x3", 4, 6);
    FAIL("expected semantic error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Semantic);
    CHECK(e.line() == 4);
    CHECK(e.column() == 12);
  }
  try {
    (void)parse_polynomial(ring, "x1 + * y1");
    FAIL("expected syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS((void)parse_polynomial(ring, "x1^"), ParseError);
  CHECK_THROWS_AS((void)parse_polynomial(ring, "(x1"), ParseError);
  CHECK_THROWS_AS((void)parse_polynomial(ring, "1/0"), ParseError);
}

TEST_CASE("prime field parsing reduces coefficients") {
  const BigradedRing ring(1, 1, Field::prime(7));
  CHECK(poly(ring, "8*x1 + 7*y1") == poly(ring, "x1"));
  CHECK(poly(ring, "1/2*x1") == poly(ring, "4*x1"));
}

TEST_CASE("property: ring axioms hold exactly") {
  Generator gen(17);
  for (const Field field : {Field::rationals(), Field::prime(65521)}) {
    const BigradedRing ring(2, 2, field);
    for (int trial = 0; trial < 60; ++trial) {
      const auto p = gen.polynomial(ring, 4, 3);
      const auto q = gen.polynomial(ring, 4, 3);
      const auto r = gen.polynomial(ring, 4, 3);
      CHECK((p + q) == (q + p));
      CHECK((p * q) == (q * p));
      CHECK(((p + q) + r) == (p + (q + r)));
      CHECK(((p * q) * r) == (p * (q * r)));
      CHECK((p * (q + r)) == (p * q + p * r));
      CHECK((p - p).is_zero());
    }
  }
}

TEST_CASE("property: bidegrees add under multiplication") {
  Generator gen(5);
  const BigradedRing ring(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a1 = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto b1 = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto a2 = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto b2 = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto p = gen.bihomogeneous(ring, a1, b1, 3);
    const auto q = gen.bihomogeneous(ring, a2, b2, 3);
    CHECK((p * q).bidegree() == p.bidegree() + q.bidegree());
  }
}

TEST_CASE("property: printing round-trips through the parser") {
  Generator gen(99);
  for (const Field field : {Field::rationals(), Field::prime(32003)}) {
    const BigradedRing ring(2, 3, field);
    for (int trial = 0; trial < 80; ++trial) {
      auto p = gen.polynomial(ring, 5, 4);
      if (field.is_rational() && gen.coin()) {
        p = p.scaled(FieldElement::from_rational(field, mpq_class(gen.uniform(1, 9), gen.uniform(1, 9))));
      }
      CHECK(parse_polynomial(ring, p.to_string()) == p);
    }
  }
}
