#include "bicm/filtration.hpp"

#include <algorithm>
#include <map>

#include "bicm/error.hpp"
#include "bicm/hypersurface.hpp"

namespace bicm {

namespace {

using MonomialSet = std::vector<Monomial>;

MonomialSet minimalize(MonomialSet gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  MonomialSet out;
  for (auto& g : gens) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!covered) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A ⊇ B for monomial ideals given by generators.
bool monomial_contains(const MonomialSet& a, const MonomialSet& b) {
  return std::all_of(b.begin(), b.end(), [&](const Monomial& u) {
    return std::any_of(a.begin(), a.end(), [&](const Monomial& g) { return g.divides(u); });
  });
}

MonomialSet monomial_intersect(const MonomialSet& a, const MonomialSet& b) {
  MonomialSet out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) out.push_back(lcm(u, v));
  }
  return minimalize(std::move(out));
}

// Splits along coprime factorizations until only pure powers remain.
void irreducible_components(MonomialSet gens, std::vector<MonomialSet>& out) {
  gens = minimalize(std::move(gens));
  const auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return g.support_size() > 1; });
  if (mixed == gens.end()) {
    out.push_back(std::move(gens));
    return;
  }
  const Monomial g = *mixed;
  std::size_t var = 0;
  while (g[var] == 0) ++var;
  const Monomial power = Monomial::variable(g.size(), var, g[var]);
  const Monomial rest = g / power;
  MonomialSet left = gens;
  left.push_back(power);
  irreducible_components(std::move(left), out);
  gens.push_back(rest);
  irreducible_components(std::move(gens), out);
}

MonomialSet monomial_generators(const Ideal& i) {
  MonomialSet gens;
  for (const auto& g : i.groebner_basis()) gens.push_back(g.leading_term().monomial);
  return gens;
}

Ideal to_ideal(const BigradedRing& ring, const MonomialSet& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::term(ring, g, FieldElement::one(ring.field())));
  return Ideal(ring, std::move(polys));
}

std::uint64_t support_of(const MonomialSet& gens) {
  std::uint64_t mask = 0;
  for (const auto& g : gens) mask |= g.support_mask();
  return mask;
}

int block_count_outside(const BigradedRing& ring, VariableBlock block, std::uint64_t mask) {
  int count = 0;
  for (std::size_t v : block_variables(ring, block)) {
    if ((mask >> v & 1U) == 0) ++count;
  }
  return count;
}

Ideal intersect_all(const BigradedRing& ring, const std::vector<Ideal>& ideals) {
  if (ideals.empty()) return Ideal::unit(ring);
  return intersect(std::span<const Ideal>(ideals));
}

[[noreturn]] void certificate_failure(const std::string& what) {
  throw Error(ErrorKind::CertificateVerificationFailed, what);
}

LevelRecord record_level(IdealPair quotient, int cd, const GradeResult& g, std::vector<Ideal> primes = {}) {
  LevelRecord level{std::move(quotient), cd, g.grade, g.grade == cd, g.regular_sequence, std::move(primes)};
  return level;
}

std::vector<Ideal> all_radicals(const PrimaryDecomposition& d) {
  std::vector<Ideal> out;
  for (const auto& c : d.components) out.push_back(c.radical);
  return out;
}

SeqCMVerdict single_level_verdict(const Ideal& i, VariableBlock block, const CdGradeReport& report, Route route,
                                  std::vector<Ideal> primes) {
  SeqCMVerdict verdict;
  verdict.decision = report.relative_cm;
  verdict.route = route;
  verdict.filtration.block = block;
  verdict.filtration.chain = {i, Ideal::unit(i.ring())};
  verdict.filtration.levels.push_back(
      LevelRecord{IdealPair::cyclic(i), report.cd, report.grade, report.relative_cm, report.regular_sequence,
                  std::move(primes)});
  if (!report.relative_cm) verdict.filtration.failed_level = 0;
  return verdict;
}

// 0 ⊊ H^0(M) ⊊ M when cd(M) = 1 and grade(M) = 0.
SeqCMVerdict torsion_split_verdict(const Ideal& i, VariableBlock block, std::uint64_t seed) {
  const BigradedRing& ring = i.ring();
  const Ideal sat = saturation(i, block_ideal(ring, block));
  if (sat == i || sat.is_unit()) certificate_failure("H^0 level of " + i.to_string() + " is not proper");
  const IdealPair torsion(sat, i);
  const int cd0 = cd_by_annihilator(torsion, block);
  const GradeResult g0 = grade_wrt(torsion, block, seed);
  const IdealPair top = IdealPair::cyclic(sat);
  const int cd1 = cd_wrt(sat, block);
  const GradeResult g1 = grade_wrt(top, block, seed);
  if (cd0 != 0 || g0.grade != 0 || cd1 != 1 || g1.grade != 1) {
    certificate_failure("torsion filtration of " + i.to_string() + " does not verify");
  }
  SeqCMVerdict verdict;
  verdict.decision = true;
  verdict.route = Route::CdAtMostOne;
  verdict.filtration.block = block;
  verdict.filtration.chain = {i, sat, Ideal::unit(ring)};
  verdict.filtration.levels.push_back(record_level(torsion, cd0, g0));
  verdict.filtration.levels.push_back(record_level(top, cd1, g1));
  return verdict;
}

SeqCMVerdict monomial_filtration_verdict(const DimensionFiltration& df, std::uint64_t seed) {
  SeqCMVerdict verdict;
  verdict.route = Route::MonomialFiltration;
  verdict.filtration.block = df.block;
  verdict.filtration.chain = df.chain;
  verdict.decision = true;
  for (std::size_t k = 0; k < df.cds.size(); ++k) {
    // D_{k+1}/D_k ≅ (D_{k+1} + E_{k+1}) / E_{k+1}
    const Ideal& e = df.level_parts[k];
    const IdealPair quotient(df.chain[k + 1] + e, e);
    const int cd = cd_subquotient(quotient, df.block, CdHints{true});
    if (cd != df.cds[k] || cd_by_annihilator(quotient, df.block) != cd) {
      certificate_failure("level " + std::to_string(k + 1) + " of the dimension filtration has cd " +
                          std::to_string(cd) + ", expected " + std::to_string(df.cds[k]));
    }
    LevelRecord level = record_level(quotient, cd, grade_wrt(quotient, df.block, seed), df.level_primes[k]);
    if (!level.relative_cm && verdict.decision) {
      verdict.decision = false;
      verdict.filtration.failed_level = k;
    }
    verdict.filtration.levels.push_back(std::move(level));
  }
  return verdict;
}

}  // namespace

PrimaryDecomposition monomial_primary_decomposition(const Ideal& i, VariableBlock block) {
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no primary decomposition");
  if (!i.is_monomial()) throw Error(ErrorKind::NotMonomial, "primary decomposition needs a monomial ideal: " + i.to_string());
  const BigradedRing& ring = i.ring();

  std::vector<MonomialSet> irreducible;
  irreducible_components(monomial_generators(i), irreducible);
  std::sort(irreducible.begin(), irreducible.end());
  irreducible.erase(std::unique(irreducible.begin(), irreducible.end()), irreducible.end());
  // Drop components containing another one.
  std::vector<MonomialSet> minimal;
  for (std::size_t a = 0; a < irreducible.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < irreducible.size() && !redundant; ++b) {
      redundant = a != b && monomial_contains(irreducible[a], irreducible[b]);
    }
    if (!redundant) minimal.push_back(irreducible[a]);
  }

  // Merge by radical, ordered by (number of variables, variable indices).
  auto radical_less = [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    // Lowest differing variable decides; the mask holding it sorts first.
    const std::uint64_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  };
  std::map<std::uint64_t, MonomialSet, decltype(radical_less)> merged(radical_less);
  for (auto& c : minimal) {
    const std::uint64_t mask = support_of(c);
    auto it = merged.find(mask);
    if (it == merged.end()) {
      merged.emplace(mask, std::move(c));
    } else {
      it->second = monomial_intersect(it->second, c);
    }
  }
  std::vector<std::pair<std::uint64_t, MonomialSet>> parts(merged.begin(), merged.end());

  for (std::size_t k = 0; k < parts.size() && parts.size() > 1;) {
    MonomialSet others;
    bool first = true;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j == k) continue;
      others = first ? parts[j].second : monomial_intersect(others, parts[j].second);
      first = false;
    }
    if (monomial_contains(parts[k].second, others)) {
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }

  PrimaryDecomposition out;
  for (const auto& [mask, gens] : parts) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      if (mask >> v & 1U) vars.push_back(v);
    }
    out.components.push_back(PrimaryComponent{to_ideal(ring, gens), Ideal::of_variables(ring, vars),
                                              block_count_outside(ring, block, mask)});
  }
  return out;
}

int cd_of_prime(const Ideal& radical, VariableBlock block) {
  std::uint64_t mask = 0;
  for (const auto& g : radical.groebner_basis()) {
    if (!g.is_monomial() || g.total_degree() != 1) {
      throw Error(ErrorKind::InvalidArgument, radical.to_string() + " is not generated by variables");
    }
    mask |= g.leading_term().monomial.support_mask();
  }
  return block_count_outside(radical.ring(), block, mask);
}

DimensionFiltration dimension_filtration(const Ideal& i, VariableBlock block) {
  DimensionFiltration df;
  df.block = block;
  df.decomposition = monomial_primary_decomposition(i, block);
  const BigradedRing& ring = i.ring();
  for (const auto& c : df.decomposition.components) df.cds.push_back(c.cd_value);
  std::sort(df.cds.begin(), df.cds.end());
  df.cds.erase(std::unique(df.cds.begin(), df.cds.end()), df.cds.end());

  df.chain.push_back(i);
  for (int c : df.cds) {
    std::vector<Ideal> above;
    std::vector<Ideal> at;
    std::vector<Ideal> primes;
    for (const auto& comp : df.decomposition.components) {
      if (comp.cd_value > c) above.push_back(comp.primary);
      if (comp.cd_value == c) {
        at.push_back(comp.primary);
        primes.push_back(comp.radical);
      }
    }
    Ideal d = intersect_all(ring, above);
    if (d == df.chain.back()) certificate_failure("dimension filtration of " + i.to_string() + " is not strict");
    df.chain.push_back(std::move(d));
    df.level_parts.push_back(intersect_all(ring, at));
    df.level_primes.push_back(std::move(primes));
  }
  return df;
}

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::RelativeCM: return "relative-cm";
    case Route::CdAtMostOne: return "cd-le-1";
    case Route::MonomialFiltration: return "monomial-filtration";
    case Route::HypersurfaceRank1: return "hypersurface-rank1";
    case Route::UnmixedShortcut: return "unmixed-shortcut";
  }
  return "?";
}

SeqCMVerdict is_seq_cm(const Ideal& i, VariableBlock block, std::uint64_t seed) {
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/(1) is the zero module");
  const bool monomial = i.is_monomial();
  std::optional<PrimaryDecomposition> decomposition;
  if (monomial) decomposition = monomial_primary_decomposition(i, block);
  auto primes = [&] { return decomposition ? all_radicals(*decomposition) : std::vector<Ideal>{}; };

  const CdGradeReport report = is_relative_cm(IdealPair::cyclic(i), block, seed);
  if (report.relative_cm) return single_level_verdict(i, block, report, Route::RelativeCM, primes());
  if (report.cd <= 1) return torsion_split_verdict(i, block, seed);

  if (monomial) {
    const auto& comps = decomposition->components;
    const bool unmixed = std::all_of(comps.begin(), comps.end(),
                                     [&](const PrimaryComponent& c) { return c.cd_value == comps.front().cd_value; });
    // Unmixed and sequentially CM forces CM w.r.t. the block.
    if (unmixed) return single_level_verdict(i, block, report, Route::UnmixedShortcut, primes());
    return monomial_filtration_verdict(dimension_filtration(i, block), seed);
  }

  if (i.is_principal() && block != VariableBlock::M) {
    const Polynomial& f = i.groebner_basis().front();
    if (f.is_bihomogeneous()) return classify_hypersurface(f, block, seed);
  }
  throw Error(ErrorKind::UnsupportedIdealClass,
              "sequential CM is decided for monomial ideals, principal bihomogeneous ideals and cd <= 1; " +
                  i.to_string() + " has cd " + std::to_string(report.cd) + " w.r.t. " +
                  std::string(to_string(block)));
}

TensorCheck tensor_split_check(const Ideal& i_x, const Ideal& i_y, std::uint64_t seed) {
  if (!(i_x.ring() == i_y.ring())) throw Error(ErrorKind::RingMismatch, "tensor check across rings");
  for (const auto& g : i_x.generators()) {
    if (!g.uses_only_x()) throw Error(ErrorKind::InvalidArgument, "I_x must use only x-variables: " + g.to_string());
  }
  for (const auto& g : i_y.generators()) {
    if (!g.uses_only_y()) throw Error(ErrorKind::InvalidArgument, "I_y must use only y-variables: " + g.to_string());
  }
  const BigradedRing& ring = i_x.ring();
  TensorCheck out;
  out.lhs = is_seq_cm(i_x + i_y, VariableBlock::Q, seed).decision;

  const BigradedRing y_ring(0, ring.n(), ring.field());
  std::vector<std::size_t> index(ring.nvars(), 0);
  for (std::size_t j = 0; j < static_cast<std::size_t>(ring.n()); ++j) index[static_cast<std::size_t>(ring.m()) + j] = j;
  std::vector<Polynomial> gens;
  for (const auto& g : i_y.generators()) gens.push_back(g.remap(y_ring, index));
  out.rhs = is_seq_cm(Ideal(y_ring, std::move(gens)), VariableBlock::M, seed).decision;
  return out;
}

const std::vector<Ideal>& quotient_associated_primes(const CMFiltration& filtration, std::size_t level) {
  if (level >= filtration.levels.size()) {
    throw Error(ErrorKind::InvalidArgument, "filtration has " + std::to_string(filtration.levels.size()) + " levels");
  }
  return filtration.levels[level].primes;
}

}  // namespace bicm
