#include "bicm/relcm.hpp"

#include <random>

#include "bicm/error.hpp"

namespace bicm {

namespace {

std::uint64_t mix_seed(std::uint64_t seed) {
  // splitmix64 finalizer; keeps nearby seeds from producing related streams.
  seed += 0x9e3779b97f4a7c15ULL;
  seed = (seed ^ (seed >> 30)) * 0xbf58476d1ce4e5b9ULL;
  seed = (seed ^ (seed >> 27)) * 0x94d049bb133111ebULL;
  return seed ^ (seed >> 31);
}

Polynomial regular_form_from_stream(const IdealPair& pair, VariableBlock block, std::mt19937_64& rng) {
  const BigradedRing& ring = pair.ring();
  const auto vars = block_variables(ring, block);
  if (vars.empty()) {
    throw Error(ErrorKind::NoRegularForm, "block " + std::string(to_string(block)) + " has no variables");
  }
  if (vars.size() == 1) {
    // Any nonzero multiple of the single variable is equivalent.
    const Polynomial l = Polynomial::variable(ring, vars.front());
    if (is_regular_on(l, pair)) return l;
  }
  for (int attempt = 0; attempt < kRegularFormRetries; ++attempt) {
    const long range = 8L << (attempt / 4);
    std::uniform_int_distribution<long> dist(-range, range);
    Polynomial l(ring);
    for (std::size_t v : vars) {
      long c = 0;
      while (c == 0) c = dist(rng);
      l += Polynomial::variable(ring, v).scaled(FieldElement::from_integer(ring.field(), c));
    }
    if (l.is_zero()) continue;
    if (is_regular_on(l, pair)) return l;
  }
  throw Error(ErrorKind::NoRegularForm,
              "no regular linear form in block " + std::string(to_string(block)) + " after " +
                  std::to_string(kRegularFormRetries) +
                  " attempts; over a small prime field use the rationals instead");
}

}  // namespace

std::string_view to_string(VariableBlock block) noexcept {
  switch (block) {
    case VariableBlock::P: return "P";
    case VariableBlock::Q: return "Q";
    case VariableBlock::M: return "m";
  }
  return "?";
}

VariableBlock parse_block(std::string_view text) {
  if (text == "P" || text == "p") return VariableBlock::P;
  if (text == "Q" || text == "q") return VariableBlock::Q;
  if (text == "m" || text == "M") return VariableBlock::M;
  throw Error(ErrorKind::InvalidArgument, "unknown block '" + std::string(text) + "' (expected P, Q or m)");
}

std::vector<std::size_t> block_variables(const BigradedRing& ring, VariableBlock block) {
  std::vector<std::size_t> out;
  const auto m = static_cast<std::size_t>(ring.m());
  const std::size_t begin = block == VariableBlock::Q ? m : 0;
  const std::size_t end = block == VariableBlock::P ? m : ring.nvars();
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

Ideal block_ideal(const BigradedRing& ring, VariableBlock block) {
  return Ideal::of_variables(ring, block_variables(ring, block));
}

VariableBlock complementary(VariableBlock block) noexcept {
  switch (block) {
    case VariableBlock::P: return VariableBlock::Q;
    case VariableBlock::Q: return VariableBlock::P;
    case VariableBlock::M: return VariableBlock::M;
  }
  return VariableBlock::M;
}

IdealPair::IdealPair(Ideal a, Ideal b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_.ring() == b_.ring())) throw Error(ErrorKind::RingMismatch, "ideal pair across rings");
  if (!a_.contains(b_)) {
    throw Error(ErrorKind::InvalidArgument, "ideal pair needs B ⊆ A: " + b_.to_string() + " ⊄ " + a_.to_string());
  }
}

IdealPair IdealPair::cyclic(const Ideal& i) { return IdealPair(Ideal::unit(i.ring()), i); }

bool IdealPair::is_cyclic() const { return a_.is_unit(); }

bool IdealPair::is_zero() const { return b_.contains(a_); }

std::string IdealPair::to_string() const { return a_.to_string() + " / " + b_.to_string(); }

int cd_wrt(const Ideal& i, VariableBlock block) {
  if (i.is_unit()) throw Error(ErrorKind::ZeroModule, "cd of the zero module S/(1)");
  if (block == VariableBlock::M) return krull_dim(i);
  return krull_dim(i + block_ideal(i.ring(), complementary(block)));
}

bool is_regular_on(const Polynomial& l, const IdealPair& pair) {
  const Ideal colon = ideal_quotient(pair.b(), l);
  if (pair.is_cyclic()) return pair.b().contains(colon);
  return pair.b().contains(intersect(colon, pair.a()));
}

bool h0_is_zero(const IdealPair& pair, VariableBlock block) {
  const Ideal j = block_ideal(pair.ring(), block);
  // With no block variables, H^0 is the whole (nonzero) module.
  if (j.is_zero()) return pair.is_zero();
  const Ideal sat = saturation(pair.b(), j);
  if (pair.is_cyclic()) return pair.b().contains(sat);
  return pair.b().contains(intersect(sat, pair.a()));
}

Polynomial find_regular_linear_form(const IdealPair& pair, VariableBlock block, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  return regular_form_from_stream(pair, block, rng);
}

GradeResult grade_wrt(const IdealPair& pair, VariableBlock block, std::uint64_t seed) {
  if (pair.is_zero()) throw Error(ErrorKind::ZeroModule, "grade of the zero module");
  std::mt19937_64 rng(mix_seed(seed));
  GradeResult result;
  Ideal b = pair.b();
  const Ideal& a = pair.a();
  const std::size_t bound = block_variables(pair.ring(), block).size();
  while (result.regular_sequence.size() < bound) {
    const IdealPair current(a, b);
    if (!h0_is_zero(current, block)) break;
    Polynomial l = regular_form_from_stream(current, block, rng);
    // (A/B)/ℓ(A/B) = A/(B + ℓA)
    std::vector<Polynomial> gens = b.generators();
    for (const auto& g : a.is_unit() ? std::vector<Polynomial>{Polynomial::constant(a.ring(), 1)} : a.generators()) {
      gens.push_back(g * l);
    }
    b = Ideal(a.ring(), std::move(gens));
    result.regular_sequence.push_back(std::move(l));
  }
  result.grade = static_cast<int>(result.regular_sequence.size());
  return result;
}

int cd_subquotient(const IdealPair& pair, VariableBlock block, const CdHints& hints) {
  if (pair.is_zero()) throw Error(ErrorKind::ZeroModule, "cd of the zero module");
  const Ideal& a = pair.a();
  const Ideal& b = pair.b();
  if (a.is_unit()) return cd_wrt(b, block);
  if (a.is_principal()) {
    // hS/B ≅ S/(B : h)
    return cd_wrt(ideal_quotient(b, a.groebner_basis().front()), block);
  }
  const int cd_b = cd_wrt(b, block);
  if (cd_b > cd_wrt(a, block)) return cd_b;
  if (hints.ambient_unmixed) return cd_b;
  throw Error(ErrorKind::UndecidableByRules,
              "cd of " + pair.to_string() + " is not determined by the exact-sequence rules; "
              "supply an unmixedness hint");
}

int cd_by_annihilator(const IdealPair& pair, VariableBlock block) {
  if (pair.is_zero()) throw Error(ErrorKind::ZeroModule, "cd of the zero module");
  Ideal c = pair.b();
  if (block != VariableBlock::M) {
    const Ideal j = block_ideal(pair.ring(), complementary(block));
    if (!j.is_zero()) c = c + j * pair.a();
  }
  return krull_dim(ideal_quotient(c, pair.a()));
}

CdGradeReport is_relative_cm(const IdealPair& pair, VariableBlock block, std::uint64_t seed,
                             const CdHints& hints) {
  CdGradeReport report;
  report.cd = cd_subquotient(pair, block, hints);
  GradeResult g = grade_wrt(pair, block, seed);
  report.grade = g.grade;
  report.regular_sequence = std::move(g.regular_sequence);
  report.relative_cm = report.grade == report.cd;
  return report;
}

}  // namespace bicm
