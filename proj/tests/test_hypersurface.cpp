#include "doctest.h"

#include "bicm/error.hpp"
#include "bicm/hypersurface.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bicm;
using bicm::testing::Generator;
using bicm::testing::ideal;
using bicm::testing::poly;

namespace {

const BigradedRing R22(2, 2);

Polynomial random_split(Generator& gen, const BigradedRing& ring, std::uint32_t a, std::uint32_t b) {
  const auto h1 = gen.bihomogeneous(ring, a, 0, 3);
  const auto h2 = gen.bihomogeneous(ring, 0, b, 3);
  return h1 * h2;
}

// Rank of the coefficient matrix by plain dense elimination over the field.
std::size_t oracle_rank(const Polynomial& f) {
  const auto m = coefficient_matrix(f);
  return testing::dense_rank(m.entries);
}

}  // namespace

TEST_CASE("coefficient matrix") {
  const auto m = coefficient_matrix(poly(R22, "x1*y1 + x2*y2"));
  REQUIRE(m.rows.size() == 2);
  REQUIRE(m.columns.size() == 2);
  CHECK(m.rows[0] == Monomial({1, 0, 0, 0}));
  CHECK(m.columns[1] == Monomial({0, 0, 0, 1}));
  CHECK(m.entries[0][0].is_one());
  CHECK(m.entries[0][1].is_zero());
  CHECK(m.entries[1][1].is_one());

  const auto col = coefficient_matrix(poly(R22, "(x1 + x2)*y1"));
  CHECK(col.rows.size() == 2);
  CHECK(col.columns.size() == 1);

  const auto pure = coefficient_matrix(poly(R22, "x1^2"));
  CHECK(pure.rows.size() == 1);
  REQUIRE(pure.columns.size() == 1);
  CHECK(pure.columns[0].is_one());
  CHECK(pure.reconstruct() == poly(R22, "x1^2"));

  CHECK_THROWS_AS(coefficient_matrix(poly(R22, "x1 + y1")), Error);
  CHECK_THROWS_AS(coefficient_matrix(Polynomial(R22)), Error);
}

TEST_CASE("rank one split") {
  CHECK_FALSE(rank_one_split(poly(R22, "x1*y1 + x2*y2")).has_value());
  CHECK(exact_rank(coefficient_matrix(poly(R22, "x1*y1 + x2*y2"))) == 2);

  const auto s = rank_one_split(poly(R22, "x1*y1 + x2*y1"));
  REQUIRE(s.has_value());
  CHECK(s->verified);
  CHECK(s->h1 == poly(R22, "x1 + x2"));
  CHECK(s->h2 == poly(R22, "y1"));

  const auto mono = rank_one_split(poly(R22, "x1^2*y1^3"));
  REQUIRE(mono.has_value());
  CHECK(mono->h1 == poly(R22, "x1^2"));
  CHECK(mono->h2 == poly(R22, "y1^3"));

  // Scale lands on h1; h2 stays monic.
  const auto scaled = rank_one_split(poly(R22, "(2*x1 - x2)*(3*y1 + y2)"));
  REQUIRE(scaled.has_value());
  CHECK(scaled->h2 == poly(R22, "y1 + 1/3*y2"));
  CHECK(scaled->h1 == poly(R22, "6*x1 - 3*x2"));
}

TEST_CASE("hypersurface invariants") {
  const auto e = hypersurface_stats(poly(R22, "x1*y1 + x2*y2"), 0);
  CHECK(e.grade_q == 1);
  CHECK(e.cd_q == 2);
  const auto y = hypersurface_stats(poly(R22, "y1^2"), 0);
  CHECK(y.cd_p == 2);
  CHECK(y.cd_q == 1);
  CHECK(y.grade_p == 2);
  CHECK(y.grade_q == 1);
  const auto x = hypersurface_stats(poly(R22, "x1"), 0);
  CHECK(x.cd_p == 1);
  CHECK(x.cd_q == 2);
  CHECK_THROWS_AS(hypersurface_stats(Polynomial::constant(R22, 3), 0), Error);
}

TEST_CASE("classification") {
  CHECK_FALSE(classify_hypersurface(poly(R22, "x1*y1 + x2*y2"), VariableBlock::Q, 0).decision);

  const auto v = classify_hypersurface(poly(R22, "x1*y1"), VariableBlock::Q, 0);
  CHECK(v.decision);
  REQUIRE(v.filtration.chain.size() == 3);
  CHECK(v.filtration.chain[1] == ideal(R22, "x1"));
  CHECK(v.filtration.levels[0].cd == 1);
  CHECK(v.filtration.levels[1].cd == 2);
  const auto df = dimension_filtration(ideal(R22, "x1*y1"), VariableBlock::Q);
  CHECK(df.chain == v.filtration.chain);

  const auto f = poly(R22, "x1*y1 + x2*y1");
  const auto p = classify_hypersurface(f, VariableBlock::P, 0);
  CHECK(p.decision);
  CHECK(p.decision == classify_hypersurface(f, VariableBlock::Q, 0).decision);
  // P-certificate goes through h2.
  CHECK(p.filtration.chain[1] == ideal(R22, "y1"));

  const auto single = classify_hypersurface(poly(R22, "y1*y2 + y2^2"), VariableBlock::Q, 0);
  CHECK(single.decision);
  CHECK(single.filtration.levels.size() == 1);
  CHECK_THROWS_AS(classify_hypersurface(f, VariableBlock::M, 0), Error);
}

TEST_CASE("prime field") {
  const BigradedRing ring(2, 2, Field::prime(101));
  const auto f = poly(ring, "(x1 + 3*x2)*(y1 - y2)");
  const auto s = rank_one_split(f);
  REQUIRE(s.has_value());
  CHECK(s->h1 * s->h2 == f);
  CHECK(exact_rank(coefficient_matrix(poly(ring, "x1*y1 + x2*y2"))) == 2);
  CHECK(classify_hypersurface(f, VariableBlock::Q, 0).decision);
}

TEST_CASE("property: reconstruction and exact rank") {
  Generator gen(61);
  for (int trial = 0; trial < 80; ++trial) {
    const BigradedRing ring(gen.uniform(1, 3), gen.uniform(1, 3), trial % 2 ? Field::prime(32003) : Field::rationals());
    const auto a = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto b = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto f = gen.bihomogeneous(ring, a, b, 6);
    const auto m = coefficient_matrix(f);
    CHECK(m.reconstruct() == f);
    CHECK(exact_rank(m) == oracle_rank(f));
    CHECK(rank_one_split(f).has_value() == (exact_rank(m) <= 1));
  }
}

TEST_CASE("property: splits classify true, rank >= 2 classify false, P and Q agree") {
  Generator gen(67);
  int split_count = 0;
  int wide_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const BigradedRing ring(gen.uniform(1, 3), gen.uniform(1, 3));
    const auto a = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto b = static_cast<std::uint32_t>(gen.uniform(0, 2));
    if (a + b == 0) continue;
    const auto f = random_split(gen, ring, a, b);
    const auto q = classify_hypersurface(f, VariableBlock::Q, 0);
    const auto p = classify_hypersurface(f, VariableBlock::P, 0);
    CHECK(q.decision);
    CHECK(p.decision);
    for (const auto& level : q.filtration.levels) CHECK(level.relative_cm);
    ++split_count;

    if (a == 0 || b == 0 || ring.m() < 2 || ring.n() < 2) continue;
    const auto g = f + gen.bihomogeneous(ring, a, b, 3);
    if (oracle_rank(g) < 2) continue;
    CHECK_FALSE(classify_hypersurface(g, VariableBlock::Q, 0).decision);
    CHECK_FALSE(classify_hypersurface(g, VariableBlock::P, 0).decision);
    ++wide_count;
  }
  CHECK(split_count > 40);
  CHECK(wide_count > 5);
}

TEST_CASE("property: invariants of hypersurfaces by bidegree") {
  Generator gen(71);
  for (int trial = 0; trial < 40; ++trial) {
    const BigradedRing ring(gen.uniform(2, 3), gen.uniform(2, 3));
    const auto a = static_cast<std::uint32_t>(gen.uniform(0, 2));
    const auto b = static_cast<std::uint32_t>(gen.uniform(0, 2));
    if (a + b == 0) continue;
    const auto f = gen.bihomogeneous(ring, a, b, 4);
    const auto s = hypersurface_stats(f, 0);
    const int m = ring.m();
    const int n = ring.n();
    if (a == 0) {
      CHECK(s.cd_p == m);
      CHECK(s.grade_p == m);
      CHECK(s.cd_q == n - 1);
      CHECK(s.grade_q == n - 1);
    } else if (b == 0) {
      CHECK(s.cd_p == m - 1);
      CHECK(s.grade_p == m - 1);
      CHECK(s.cd_q == n);
      CHECK(s.grade_q == n);
    } else {
      CHECK(s.cd_p == m);
      CHECK(s.grade_p == m - 1);
      CHECK(s.cd_q == n);
      CHECK(s.grade_q == n - 1);
    }
  }
}

TEST_CASE("property: monomial hypersurfaces agree with the filtration module") {
  Generator gen(73);
  for (int trial = 0; trial < 30; ++trial) {
    const BigradedRing ring(2, 2);
    const auto a = static_cast<std::uint32_t>(gen.uniform(0, 3));
    const auto b = static_cast<std::uint32_t>(gen.uniform(0, 3));
    if (a + b == 0) continue;
    const auto f = gen.bihomogeneous(ring, a, b, 1);
    const auto v = classify_hypersurface(f, VariableBlock::Q, 0);
    const Ideal i = Ideal::principal(f);
    CHECK(v.filtration.chain == dimension_filtration(i, VariableBlock::Q).chain);
    CHECK(v.decision == is_seq_cm(i, VariableBlock::Q, 0).decision);
  }
}
