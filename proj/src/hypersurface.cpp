#include "bicm/hypersurface.hpp"

#include <algorithm>

#include <gmpxx.h>

#include "bicm/error.hpp"

namespace bicm {

namespace {

// (x-part, y-part) of a monomial, each as a monomial of the full ring.
std::pair<Monomial, Monomial> split_monomial(const BigradedRing& ring, const Monomial& mono) {
  std::vector<std::uint32_t> xs(ring.nvars(), 0);
  std::vector<std::uint32_t> ys(ring.nvars(), 0);
  for (std::size_t v = 0; v < ring.nvars(); ++v) (ring.is_x(v) ? xs : ys)[v] = mono[v];
  return {Monomial(std::move(xs)), Monomial(std::move(ys))};
}

void sort_descending(std::vector<Monomial>& monos) {
  const auto order = MonomialOrder::grevlex();
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = m[rank][c] * m[r][k] - m[r][c] * m[rank][k];
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t field_rank(std::vector<std::vector<FieldElement>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const FieldElement inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldElement factor = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

[[noreturn]] void certificate_failure(const std::string& what) {
  throw Error(ErrorKind::CertificateVerificationFailed, what);
}

LevelRecord verified_level(IdealPair quotient, VariableBlock block, std::uint64_t seed) {
  const CdGradeReport r = is_relative_cm(quotient, block, seed);
  return LevelRecord{std::move(quotient), r.cd, r.grade, r.relative_cm, r.regular_sequence, {}};
}

// (f) ⊊ (h) ⊊ (1) if both quotients are relative CM with increasing cd.
std::optional<CMFiltration> two_level_candidate(const Polynomial& f, const Polynomial& h, VariableBlock block,
                                                std::uint64_t seed) {
  const Ideal fi = Ideal::principal(f);
  const Ideal hi = Ideal::principal(h);
  CMFiltration filtration;
  filtration.block = block;
  filtration.chain = {fi, hi, Ideal::unit(f.ring())};
  filtration.levels.push_back(verified_level(IdealPair(hi, fi), block, seed));
  filtration.levels.push_back(verified_level(IdealPair::cyclic(hi), block, seed));
  const auto& lo = filtration.levels[0];
  const auto& hi_level = filtration.levels[1];
  if (lo.relative_cm && hi_level.relative_cm && lo.cd < hi_level.cd) return filtration;
  return std::nullopt;
}

}  // namespace

Polynomial CoefficientMatrix::reconstruct() const {
  std::vector<Term> terms;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!entries[r][c].is_zero()) terms.push_back(Term{rows[r] * columns[c], entries[r][c]});
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

CoefficientMatrix coefficient_matrix(const Polynomial& f) {
  const BigradedRing& ring = f.ring();
  CoefficientMatrix out{ring, f.bidegree(), {}, {}, {}};
  for (const auto& t : f.terms()) {
    auto [x, y] = split_monomial(ring, t.monomial);
    out.rows.push_back(std::move(x));
    out.columns.push_back(std::move(y));
  }
  sort_descending(out.rows);
  sort_descending(out.columns);
  out.entries.assign(out.rows.size(), std::vector<FieldElement>(out.columns.size(), FieldElement::zero(ring.field())));
  for (const auto& t : f.terms()) {
    const auto [x, y] = split_monomial(ring, t.monomial);
    const auto r = static_cast<std::size_t>(std::find(out.rows.begin(), out.rows.end(), x) - out.rows.begin());
    const auto c = static_cast<std::size_t>(std::find(out.columns.begin(), out.columns.end(), y) - out.columns.begin());
    out.entries[r][c] = t.coefficient;
  }
  return out;
}

std::size_t exact_rank(const CoefficientMatrix& matrix) {
  if (!matrix.ring.field().is_rational()) return field_rank(matrix.entries);
  std::vector<std::vector<mpz_class>> ints;
  for (const auto& row : matrix.entries) {
    mpz_class scale = 1;
    for (const auto& e : row) {
      const mpq_class q = e.to_rational();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    for (const auto& e : row) {
      const mpq_class q = e.to_rational() * scale;
      out.push_back(q.get_num());
    }
    ints.push_back(std::move(out));
  }
  return bareiss_rank(std::move(ints));
}

std::optional<SplitWitness> rank_one_split(const Polynomial& f) {
  const BigradedRing& ring = f.ring();
  f.bidegree();
  const Term& lead = f.leading_term();
  const auto [x0, y0] = split_monomial(ring, lead.monomial);
  const FieldElement c0_inv = lead.coefficient.inverse();
  std::vector<Term> row;
  std::vector<Term> column;
  for (const auto& t : f.terms()) {
    const auto [x, y] = split_monomial(ring, t.monomial);
    if (x == x0) row.push_back(Term{y, t.coefficient});
    if (y == y0) column.push_back(Term{x, t.coefficient * c0_inv});
  }
  Polynomial h2 = Polynomial::from_terms(ring, std::move(row));
  Polynomial h1 = Polynomial::from_terms(ring, std::move(column));
  const FieldElement scale = h2.leading_term().coefficient;
  h2 = h2.monic();
  h1 = h1.scaled(scale);
  if (!(h1 * h2 == f)) return std::nullopt;
  return SplitWitness{std::move(h1), std::move(h2), true};
}

HypersurfaceStats hypersurface_stats(const Polynomial& f, std::uint64_t seed) {
  HypersurfaceStats stats;
  stats.bidegree = f.bidegree();
  const Ideal i = Ideal::principal(f);
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/(f) is zero for a constant f");
  const IdealPair pair = IdealPair::cyclic(i);
  stats.cd_p = cd_wrt(i, VariableBlock::P);
  stats.cd_q = cd_wrt(i, VariableBlock::Q);
  stats.grade_p = grade_wrt(pair, VariableBlock::P, seed).grade;
  stats.grade_q = grade_wrt(pair, VariableBlock::Q, seed).grade;
  return stats;
}

SeqCMVerdict classify_hypersurface(const Polynomial& f, VariableBlock block, std::uint64_t seed) {
  if (block == VariableBlock::M) {
    throw Error(ErrorKind::InvalidArgument, "the hypersurface classifier works w.r.t. P or Q");
  }
  const BiDegree d = f.bidegree();
  if (d.a == 0 && d.b == 0) throw Error(ErrorKind::UnitIdeal, "S/(f) is zero for a constant f");
  const Ideal fi = Ideal::principal(f);

  SeqCMVerdict verdict;
  verdict.route = Route::HypersurfaceRank1;
  const auto split = rank_one_split(f);
  if (!split) {
    if (exact_rank(coefficient_matrix(f)) < 2) certificate_failure("rank test and split disagree on " + f.to_string());
    verdict.decision = false;
    verdict.filtration.block = block;
    verdict.filtration.chain = {fi, Ideal::unit(f.ring())};
    verdict.filtration.levels.push_back(verified_level(IdealPair::cyclic(fi), block, seed));
    verdict.filtration.failed_level = 0;
    return verdict;
  }

  if (d.a == 0 || d.b == 0) {
    verdict.filtration.block = block;
    verdict.filtration.chain = {fi, Ideal::unit(f.ring())};
    verdict.filtration.levels.push_back(verified_level(IdealPair::cyclic(fi), block, seed));
    if (!verdict.filtration.levels.front().relative_cm) {
      certificate_failure(f.to_string() + " has a single-block degree but is not relative CM");
    }
    verdict.decision = true;
    return verdict;
  }

  // The Q-filtration is expected to go through h1 and the P-filtration
  // through h2; try that first, then the other.
  const Polynomial& first = block == VariableBlock::Q ? split->h1 : split->h2;
  const Polynomial& second = block == VariableBlock::Q ? split->h2 : split->h1;
  auto filtration = two_level_candidate(f, first, block, seed);
  if (!filtration) filtration = two_level_candidate(f, second, block, seed);
  if (!filtration) certificate_failure("no two-level certificate verifies for " + f.to_string());
  verdict.decision = true;
  verdict.filtration = std::move(*filtration);
  return verdict;
}

}  // namespace bicm
