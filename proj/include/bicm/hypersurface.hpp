#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bicm/filtration.hpp"
#include "bicm/polynomial.hpp"

namespace bicm {

// f = Σ c_{αβ} x^α y^β as a matrix over the occurring x-monomials (rows) and
// y-monomials (columns), both in descending default order. Labels are
// monomials of the full ring; an empty block shows up as the constant 1.
struct CoefficientMatrix {
  BigradedRing ring;
  BiDegree bidegree;
  std::vector<Monomial> rows;
  std::vector<Monomial> columns;
  std::vector<std::vector<FieldElement>> entries;

  Polynomial reconstruct() const;
};

CoefficientMatrix coefficient_matrix(const Polynomial& f);

// Exact rank; fraction-free (Bareiss) elimination over the integers after
// clearing denominators for QQ, plain elimination over a prime field.
std::size_t exact_rank(const CoefficientMatrix& matrix);

struct SplitWitness {
  Polynomial h1;  // bidegree (a, 0)
  Polynomial h2;  // bidegree (0, b), monic
  bool verified = false;
};

// f = h1(x)·h2(y) or nothing.
std::optional<SplitWitness> rank_one_split(const Polynomial& f);

struct HypersurfaceStats {
  BiDegree bidegree;
  int grade_p = 0;
  int cd_p = 0;
  int grade_q = 0;
  int cd_q = 0;
};

HypersurfaceStats hypersurface_stats(const Polynomial& f, std::uint64_t seed);

// Sequential CM of S/fS w.r.t. P or Q. The certificate for a split f with a, b
// > 0 is (f) ⊊ (h1) ⊊ (1) for Q and (f) ⊊ (h2) ⊊ (1) for P; both candidates
// are re-verified and the one with strictly increasing cds is kept.
SeqCMVerdict classify_hypersurface(const Polynomial& f, VariableBlock block, std::uint64_t seed);

}  // namespace bicm
