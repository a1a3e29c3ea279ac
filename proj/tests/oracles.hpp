#pragma once

// Independent reference computations used only by tests. None of these call
// into the Groebner engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "bicm/polynomial.hpp"
#include "support.hpp"

namespace bicm::testing {

// Rank of a dense matrix over the field by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<FieldElement>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const FieldElement inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const FieldElement factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Membership of a homogeneous f in the ideal of homogeneous generators by
// linear algebra in the degree-deg(f) component: f lies in the span of
// u * g over all monomials u of complementary degree. Exact for homogeneous
// input within the degree bound.
inline bool dense_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const BigradedRing& ring = f.ring();
  const std::uint32_t d = f.total_degree();
  const auto basis = monomials_of_degree(ring.nvars(), d);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
  auto to_row = [&](const Polynomial& p) {
    std::vector<FieldElement> row(basis.size(), FieldElement::zero(ring.field()));
    for (const auto& t : p.terms()) row[column.at(t.monomial)] = t.coefficient;
    return row;
  };
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& g : gens) {
    const std::uint32_t dg = g.total_degree();
    if (dg > d) continue;
    for (const auto& u : monomials_of_degree(ring.nvars(), d - dg)) rows.push_back(to_row(g.times_monomial(u)));
  }
  const std::size_t r0 = dense_rank(rows);
  rows.push_back(to_row(f));
  return dense_rank(std::move(rows)) == r0;
}

// Monomial ideal helpers on exponent vectors.
inline bool monomial_in(const Monomial& u, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
}

// (I : u) for a monomial ideal I.
inline std::vector<Monomial> monomial_colon(const std::vector<Monomial>& gens, const Monomial& u) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(g / gcd(g, u));
  return out;
}

// dim S/I for a monomial ideal by exhaustive search over variable subsets.
inline int brute_force_dim(std::size_t nvars, const std::vector<Monomial>& gens) {
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
    bool independent = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      return (g.support_mask() & ~mask) == 0;
    });
    if (independent) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

}  // namespace bicm::testing
