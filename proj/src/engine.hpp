#pragma once

// Term-list level Buchberger engine. Works on bare exponent vectors so the
// ideal layer can prepend auxiliary elimination variables without a ring.

#include <vector>

#include "bicm/field.hpp"
#include "bicm/monomial.hpp"
#include "bicm/polynomial.hpp"

namespace bicm::detail {

// Terms sorted strictly descending under the order in use.
using TermList = std::vector<Term>;

TermList to_term_list(const Polynomial& p, std::size_t auxiliary, const MonomialOrder& order);
Polynomial from_term_list(const BigradedRing& ring, const TermList& terms, std::size_t auxiliary);

void sort_terms(TermList& terms, const MonomialOrder& order);

// a - c * mono * b, both inputs sorted under `order`.
TermList sub_scaled(const TermList& a, const FieldElement& c, const Monomial& mono,
                    const TermList& b, const MonomialOrder& order);

// Full reduction of f modulo `basis` (leading coefficients need not be 1).
TermList normal_form(TermList f, const std::vector<TermList>& basis, const MonomialOrder& order);

// Unique reduced Groebner basis (monic, interreduced), sorted by descending
// leading monomial. Zero inputs are ignored.
std::vector<TermList> reduced_groebner_basis(std::vector<TermList> generators,
                                             const MonomialOrder& order);

}  // namespace bicm::detail
