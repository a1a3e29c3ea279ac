#include "engine.hpp"

#include <algorithm>
#include <cstdint>

namespace bicm::detail {

TermList to_term_list(const Polynomial& p, std::size_t auxiliary, const MonomialOrder& order) {
  TermList out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    out.push_back(Term{auxiliary == 0 ? t.monomial : t.monomial.extend_front(auxiliary), t.coefficient});
  }
  if (!(order == MonomialOrder::grevlex()) || auxiliary != 0) sort_terms(out, order);
  return out;
}

Polynomial from_term_list(const BigradedRing& ring, const TermList& terms, std::size_t auxiliary) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    out.push_back(Term{auxiliary == 0 ? t.monomial : t.monomial.drop_front(auxiliary), t.coefficient});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

void sort_terms(TermList& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
}

TermList sub_scaled(const TermList& a, const FieldElement& c, const Monomial& mono,
                    const TermList& b, const MonomialOrder& order) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = b[j].monomial * mono;
      have_shifted = true;
    }
    int cmp;
    if (i >= a.size()) {
      cmp = -1;
    } else if (j >= b.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(a[i].monomial, shifted);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(shifted), -(c * b[j].coefficient)});
      ++j;
      have_shifted = false;
    } else {
      FieldElement s = a[i].coefficient - c * b[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

namespace {

const TermList* find_reducer(const Monomial& mono, const std::vector<TermList>& basis) {
  for (const auto& g : basis) {
    if (!g.empty() && g.front().monomial.divides(mono)) return &g;
  }
  return nullptr;
}

const TermList* find_reducer(const Monomial& mono, const std::vector<TermList>& polys,
                             const std::vector<std::size_t>& active) {
  for (std::size_t k : active) {
    if (polys[k].front().monomial.divides(mono)) return &polys[k];
  }
  return nullptr;
}

// Normal form against polys[active]; reducers are monic.
template <typename FindReducer>
TermList reduce_with(TermList f, const MonomialOrder& order, FindReducer&& find) {
  TermList remainder;
  while (!f.empty()) {
    const Term& lead = f.front();
    const TermList* g = find(lead.monomial);
    if (g == nullptr) {
      remainder.push_back(lead);
      f.erase(f.begin());
      continue;
    }
    const FieldElement c = lead.coefficient / g->front().coefficient;
    const Monomial shift = lead.monomial / g->front().monomial;
    TermList tail(f.begin() + 1, f.end());
    TermList gtail(g->begin() + 1, g->end());
    f = sub_scaled(tail, c, shift, gtail, order);
  }
  return remainder;
}

TermList make_monic(TermList f) {
  if (f.empty() || f.front().coefficient.is_one()) return f;
  const FieldElement inv = f.front().coefficient.inverse();
  for (auto& t : f) t.coefficient *= inv;
  return f;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Degree of the lcm first, then the order: the normal strategy restricted to
// degree-compatible selection.
bool pair_before(const CriticalPair& a, const CriticalPair& b, const MonomialOrder& order) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  return order.compare(a.lcm, b.lcm) < 0;
}

TermList s_polynomial(const TermList& f, const TermList& g, const Monomial& l,
                      const MonomialOrder& order) {
  // f, g monic.
  const Monomial uf = l / f.front().monomial;
  const Monomial ug = l / g.front().monomial;
  TermList ft;
  ft.reserve(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) ft.push_back(Term{f[k].monomial * uf, f[k].coefficient});
  TermList gt(g.begin() + 1, g.end());
  return sub_scaled(ft, g.front().coefficient, ug, gt, order);
}

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  void insert(TermList h) {
    h = make_monic(std::move(h));
    const std::size_t k = polys_.size();
    const Monomial lm_h = h.front().monomial;
    polys_.push_back(std::move(h));

    // Gebauer-Moeller update.
    std::vector<CriticalPair> candidates;
    candidates.reserve(active_.size());
    for (std::size_t g : active_) {
      candidates.push_back(CriticalPair{g, k, lcm(polys_[g].front().monomial, lm_h)});
    }
    std::vector<bool> keep(candidates.size(), false);
    std::vector<bool> removed(candidates.size(), false);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Monomial& lm_g = polys_[candidates[c].i].front().monomial;
      bool retain = lm_g.coprime(lm_h);
      if (!retain) {
        retain = true;
        for (std::size_t d = 0; d < candidates.size(); ++d) {
          if (d == c || removed[d]) continue;
          // Pairs still pending (d > c, or earlier ones kept) may dominate.
          if (d < c && !keep[d]) continue;
          if (candidates[d].lcm.divides(candidates[c].lcm)) {
            retain = false;
            break;
          }
        }
      }
      keep[c] = retain;
      removed[c] = !retain;
    }

    std::vector<CriticalPair> next;
    next.reserve(pairs_.size() + candidates.size());
    for (auto& p : pairs_) {
      const bool dominated = lm_h.divides(p.lcm) &&
                             !(lcm(polys_[p.i].front().monomial, lm_h) == p.lcm) &&
                             !(lcm(polys_[p.j].front().monomial, lm_h) == p.lcm);
      if (!dominated) next.push_back(std::move(p));
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!keep[c]) continue;
      const Monomial& lm_g = polys_[candidates[c].i].front().monomial;
      if (lm_g.coprime(lm_h)) continue;  // product criterion
      next.push_back(std::move(candidates[c]));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    still.reserve(active_.size() + 1);
    for (std::size_t g : active_) {
      if (!lm_h.divides(polys_[g].front().monomial)) still.push_back(g);
    }
    still.push_back(k);
    active_ = std::move(still);
  }

  TermList reduce(TermList f) const {
    return reduce_with(std::move(f), order_, [&](const Monomial& mono) {
      return find_reducer(mono, polys_, active_);
    });
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p) {
        if (pair_before(pairs_[p], pairs_[best], order_)) best = p;
      }
      CriticalPair pair = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      TermList s = s_polynomial(polys_[pair.i], polys_[pair.j], pair.lcm, order_);
      TermList h = reduce(std::move(s));
      if (!h.empty()) insert(std::move(h));
    }
  }

  std::vector<TermList> reduced() const {
    std::vector<TermList> basis;
    basis.reserve(active_.size());
    for (std::size_t g : active_) basis.push_back(polys_[g]);
    std::sort(basis.begin(), basis.end(), [&](const TermList& a, const TermList& b) {
      return order_.greater(a.front().monomial, b.front().monomial);
    });
    // Interreduce tails; leading monomials are already pairwise non-dividing.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<TermList> others;
      others.reserve(basis.size() - 1);
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(basis[l]);
      }
      TermList tail(basis[k].begin() + 1, basis[k].end());
      TermList reduced_tail = normal_form(std::move(tail), others, order_);
      TermList full;
      full.reserve(reduced_tail.size() + 1);
      full.push_back(basis[k].front());
      full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
      basis[k] = std::move(full);
    }
    return basis;
  }

 private:
  MonomialOrder order_;
  std::vector<TermList> polys_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

TermList normal_form(TermList f, const std::vector<TermList>& basis, const MonomialOrder& order) {
  return reduce_with(std::move(f), order,
                     [&](const Monomial& mono) { return find_reducer(mono, basis); });
}

std::vector<TermList> reduced_groebner_basis(std::vector<TermList> generators,
                                             const MonomialOrder& order) {
  Buchberger engine(order);
  // Cheap inputs first keeps the early basis small.
  std::stable_sort(generators.begin(), generators.end(), [&](const TermList& a, const TermList& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  for (auto& g : generators) {
    if (g.empty()) continue;
    TermList h = engine.reduce(std::move(g));
    if (h.empty()) continue;
    if (h.front().monomial.is_one()) {
      return {TermList{Term{h.front().monomial, FieldElement::one(h.front().coefficient.field())}}};
    }
    engine.insert(std::move(h));
  }
  engine.run();
  return engine.reduced();
}

}  // namespace bicm::detail
