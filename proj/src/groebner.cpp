#include "bicm/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bicm/error.hpp"
#include "engine.hpp"

namespace bicm {

namespace detail {

using Basis = std::vector<Polynomial>;

struct IdealState {
  IdealState(BigradedRing r, std::vector<Polynomial> g) : ring(std::move(r)), generators(std::move(g)) {}

  BigradedRing ring;
  std::vector<Polynomial> generators;

  mutable std::mutex mutex;
  mutable std::map<std::string, std::shared_ptr<const Basis>> bases;
};

namespace {

// Process-wide memo of reduced bases keyed by ring, order and generators.
class GroebnerCache {
 public:
  static GroebnerCache& instance() {
    static GroebnerCache cache;
    return cache;
  }

  std::shared_ptr<const Basis> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second;
  }

  void store(const std::string& key, std::shared_ptr<const Basis> basis) {
    std::unique_lock lock(mutex_);
    if (table_.size() >= kMaxEntries) table_.clear();
    table_.emplace(key, std::move(basis));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  static constexpr std::size_t kMaxEntries = 200000;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Basis>> table_;
};

std::string cache_key(const BigradedRing& ring, const std::vector<Polynomial>& gens,
                      const MonomialOrder& order) {
  std::string key = std::to_string(ring.m()) + "," + std::to_string(ring.n()) + "," +
                    ring.field().name() + "|" + order.tag() + "|";
  for (const auto& g : gens) {
    key += g.to_string();
    key += ';';
  }
  return key;
}

}  // namespace
}  // namespace detail

namespace {

using detail::TermList;

std::vector<Polynomial> compute_basis(const BigradedRing& ring, const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order) {
  std::vector<TermList> lists;
  lists.reserve(gens.size());
  for (const auto& g : gens) lists.push_back(detail::to_term_list(g, 0, order));
  auto basis = detail::reduced_groebner_basis(std::move(lists), order);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(detail::from_term_list(ring, b, 0));
  return out;
}

bool all_monomials(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

// Minimal monomial generators of the ideal spanned by `monos`.
std::vector<Monomial> minimalize(std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> out;
  for (auto& m : monos) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

Ideal monomial_ideal(const BigradedRing& ring, const std::vector<Monomial>& monos) {
  std::vector<Polynomial> gens;
  gens.reserve(monos.size());
  for (const auto& m : monos) gens.push_back(Polynomial::term(ring, m, FieldElement::one(ring.field())));
  return Ideal(ring, std::move(gens));
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& gens) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.leading_term().monomial);
  return out;
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "ideals from different rings");
}

// Size of a minimum set of variables meeting every support in `edges`.
int min_transversal(std::vector<std::uint64_t> edges, int budget) {
  // Find an edge not yet hit, branch on its variables.
  if (edges.empty()) return 0;
  if (budget <= 0) return 1 << 20;
  const std::uint64_t edge = *std::min_element(edges.begin(), edges.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  if (edge == 0) return 1 << 20;  // constant leading term: no transversal
  int best = 1 << 20;
  for (int v = 0; v < 64; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((edge & bit) == 0) continue;
    std::vector<std::uint64_t> rest;
    rest.reserve(edges.size());
    for (std::uint64_t e : edges) {
      if ((e & bit) == 0) rest.push_back(e);
    }
    const int sub = min_transversal(std::move(rest), std::min(budget, best) - 1);
    best = std::min(best, sub + 1);
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(BigradedRing ring) : state_(std::make_shared<detail::IdealState>(std::move(ring), std::vector<Polynomial>{})) {}

Ideal::Ideal(BigradedRing ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> nonzero;
  nonzero.reserve(generators.size());
  for (auto& g : generators) {
    if (!(g.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generator from a different ring");
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  }
  state_ = std::make_shared<detail::IdealState>(std::move(ring), std::move(nonzero));
}

Ideal Ideal::unit(const BigradedRing& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::of_variables(const BigradedRing& ring, const std::vector<std::size_t>& indices) {
  std::vector<Polynomial> gens;
  gens.reserve(indices.size());
  for (std::size_t i : indices) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

const BigradedRing& Ideal::ring() const noexcept { return state_->ring; }

const std::vector<Polynomial>& Ideal::generators() const noexcept { return state_->generators; }

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  const std::string tag = order.tag();
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->bases.find(tag);
    if (it != state_->bases.end()) return *it->second;
  }
  const std::string key = detail::cache_key(state_->ring, state_->generators, order);
  auto basis = detail::GroebnerCache::instance().find(key);
  if (!basis) {
    basis = std::make_shared<const detail::Basis>(compute_basis(state_->ring, state_->generators, order));
    detail::GroebnerCache::instance().store(key, basis);
  }
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->bases.emplace(tag, basis);
  return *it->second;
}

bool Ideal::is_zero() const { return generators().empty(); }

bool Ideal::is_unit() const {
  if (generators().empty()) return false;
  for (const auto& g : generators()) {
    if (g.is_constant()) return true;
  }
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  if (has_monomial_generators()) return true;
  return all_monomials(groebner_basis());
}

bool Ideal::is_principal() const {
  if (generators().size() <= 1) return true;
  return groebner_basis().size() <= 1;
}

bool Ideal::has_monomial_generators() const noexcept { return all_monomials(generators()); }

bool Ideal::contains(const Polynomial& f) const {
  if (!(f.ring() == ring())) throw Error(ErrorKind::RingMismatch, "polynomial from a different ring");
  if (f.is_zero()) return true;
  if (is_zero()) return false;
  if (has_monomial_generators()) {
    // Monomial ideals contain f iff they contain each of its terms.
    const auto& gens = generators();
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
      return std::any_of(gens.begin(), gens.end(),
                         [&](const Polynomial& g) { return g.leading_term().monomial.divides(t.monomial); });
    });
  }
  return normal_form(f, groebner_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  check_same_ring(*this, other);
  std::vector<Polynomial> gens = generators();
  gens.insert(gens.end(), other.generators().begin(), other.generators().end());
  return Ideal(ring(), std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  check_same_ring(*this, other);
  std::vector<Polynomial> gens;
  for (const auto& a : generators()) {
    for (const auto& b : other.generators()) gens.push_back(a * b);
  }
  return Ideal(ring(), std::move(gens));
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.state_ == b.state_) return true;
  return a.groebner_basis() == b.groebner_basis();
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i != 0) out += ", ";
    out += generators()[i].to_string();
  }
  return out + ")";
}

std::string Ideal::canonical_string() const {
  const auto& gb = groebner_basis();
  std::string out = "(";
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (i != 0) out += ", ";
    out += gb[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<TermList> lists;
  lists.reserve(basis.size());
  for (const auto& g : basis) {
    if (!(g.ring() == f.ring())) throw Error(ErrorKind::RingMismatch, "basis element from a different ring");
    lists.push_back(detail::to_term_list(g, 0, order));
  }
  return detail::from_term_list(f.ring(), detail::normal_form(detail::to_term_list(f, 0, order), lists, order), 0);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
  if (generators.empty()) return {};
  const BigradedRing& ring = generators.front().ring();
  std::vector<Polynomial> gens(generators.begin(), generators.end());
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw Error(ErrorKind::RingMismatch, "generators from different rings");
  }
  return compute_basis(ring, gens, order);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (!(f.ring() == g.ring())) throw Error(ErrorKind::RingMismatch, "division across rings");
  const auto order = MonomialOrder::grevlex();
  TermList r = detail::to_term_list(f, 0, order);
  const TermList d = detail::to_term_list(g, 0, order);
  const TermList dtail(d.begin() + 1, d.end());
  std::vector<Term> quotient;
  while (!r.empty()) {
    const Term& lead = r.front();
    if (!d.front().monomial.divides(lead.monomial)) return std::nullopt;
    const FieldElement c = lead.coefficient / d.front().coefficient;
    const Monomial shift = lead.monomial / d.front().monomial;
    quotient.push_back(Term{shift, c});
    TermList tail(r.begin() + 1, r.end());
    r = detail::sub_scaled(tail, c, shift, dtail, order);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const BigradedRing& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.has_monomial_generators() && b.has_monomial_generators()) {
    std::vector<Monomial> lcms;
    for (const auto& g : a.generators()) {
      for (const auto& h : b.generators()) lcms.push_back(lcm(g.leading_term().monomial, h.leading_term().monomial));
    }
    return monomial_ideal(ring, minimalize(std::move(lcms)));
  }
  // t*a + (1 - t)*b, eliminate t.
  const auto order = MonomialOrder::block_eliminate(1);
  const std::size_t nv = ring.nvars() + 1;
  const Monomial t = Monomial::variable(nv, 0);
  std::vector<TermList> gens;
  for (const auto& g : a.groebner_basis()) {
    TermList l = detail::to_term_list(g, 1, order);
    for (auto& term : l) term.monomial = term.monomial * t;
    gens.push_back(std::move(l));
  }
  for (const auto& h : b.groebner_basis()) {
    TermList l = detail::to_term_list(h, 1, order);
    TermList shifted;
    shifted.reserve(l.size() * 2);
    for (const auto& term : l) {
      shifted.push_back(term);
      shifted.push_back(Term{term.monomial * t, -term.coefficient});
    }
    detail::sort_terms(shifted, order);
    gens.push_back(std::move(shifted));
  }
  auto basis = detail::reduced_groebner_basis(std::move(gens), order);
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    if (g.front().monomial[0] == 0) out.push_back(detail::from_term_list(ring, g, 1));
  }
  return Ideal(ring, std::move(out));
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw Error(ErrorKind::InvalidArgument, "intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  const BigradedRing& ring = ideal.ring();
  if (!(f.ring() == ring)) throw Error(ErrorKind::RingMismatch, "quotient across rings");
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "ideal quotient by zero");
  if (f.is_constant() || ideal.is_zero()) return ideal;
  if (ideal.contains(f)) return Ideal::unit(ring);
  if (ideal.has_monomial_generators() && f.is_monomial()) {
    const Monomial& u = f.leading_term().monomial;
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      const Monomial& v = g.leading_term().monomial;
      gens.push_back(v / gcd(v, u));
    }
    return monomial_ideal(ring, minimalize(std::move(gens)));
  }
  const Ideal meet = intersect(ideal, Ideal::principal(f));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner_basis()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error(ErrorKind::InvalidArgument, "internal: intersection generator not divisible");
    gens.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Ideal> parts;
  parts.reserve(by.generators().size());
  for (const auto& g : by.generators()) parts.push_back(ideal_quotient(ideal, g));
  return intersect(parts);
}

Ideal saturation(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.is_zero()) throw Error(ErrorKind::InvalidArgument, "saturation by the zero ideal");
  Ideal current = ideal;
  for (;;) {
    Ideal next = ideal_quotient(current, by);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

Ideal leading_term_ideal(const Ideal& ideal) {
  return monomial_ideal(ideal.ring(), leading_monomials(ideal.groebner_basis()));
}

int krull_dim(const Ideal& ideal) {
  const int nvars = static_cast<int>(ideal.ring().nvars());
  if (ideal.is_zero()) return nvars;
  std::vector<Monomial> lts;
  if (ideal.has_monomial_generators()) {
    lts = leading_monomials(ideal.generators());
  } else {
    lts = leading_monomials(ideal.groebner_basis());
  }
  std::vector<std::uint64_t> edges;
  edges.reserve(lts.size());
  for (const auto& m : lts) {
    if (m.is_one()) return -1;
    edges.push_back(m.support_mask());
  }
  // Drop supersets; they are hit whenever their subsets are.
  std::sort(edges.begin(), edges.end(),
            [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t e : edges) {
    bool super = std::any_of(minimal.begin(), minimal.end(), [&](std::uint64_t k) { return (k & e) == k; });
    if (!super) minimal.push_back(e);
  }
  return nvars - min_transversal(std::move(minimal), nvars + 1);
}

void clear_groebner_cache() { detail::GroebnerCache::instance().clear(); }

std::size_t groebner_cache_size() { return detail::GroebnerCache::instance().size(); }

}  // namespace bicm
