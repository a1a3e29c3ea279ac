#pragma once

// Shared helpers for the test binaries: parsing shortcuts and random
// generators for property-style checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bicm/groebner.hpp"
#include "bicm/polynomial.hpp"

namespace bicm::testing {

inline Polynomial poly(const BigradedRing& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

inline Ideal ideal(const BigradedRing& ring, const std::string& gens) {
  return Ideal(ring, parse_polynomial_list(ring, gens));
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (nvars == 0) {
      if (left == 0) out.emplace_back(e);
      return;
    }
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      e[i] = 0;
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Monomials in the variables of [begin, end) of the given degree.
inline std::vector<Monomial> block_monomials(std::size_t nvars, std::size_t begin, std::size_t end,
                                             std::uint32_t degree) {
  std::vector<Monomial> out;
  for (const auto& sub : monomials_of_degree(end - begin, degree)) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t i = 0; i < sub.size(); ++i) e[begin + i] = sub[i];
    out.emplace_back(std::move(e));
  }
  return out;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  FieldElement coefficient(const Field& field, int range = 5) {
    int v = 0;
    while (v == 0) v = uniform(-range, range);
    return FieldElement::from_integer(field, v);
  }

  Monomial monomial(std::size_t nvars, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    const auto d = static_cast<std::uint32_t>(uniform(0, static_cast<int>(max_degree)));
    for (std::uint32_t k = 0; k < d && nvars > 0; ++k) e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))]++;
    return Monomial(std::move(e));
  }

  Monomial monomial_of_degree(std::size_t nvars, std::uint32_t degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::uint32_t k = 0; k < degree; ++k) e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))]++;
    return Monomial(std::move(e));
  }

  Polynomial polynomial(const BigradedRing& ring, int max_terms, std::uint32_t max_degree) {
    std::vector<Term> terms;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) terms.push_back(Term{monomial(ring.nvars(), max_degree), coefficient(ring.field())});
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Polynomial homogeneous(const BigradedRing& ring, int max_terms, std::uint32_t degree) {
    std::vector<Term> terms;
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
      terms.push_back(Term{monomial_of_degree(ring.nvars(), degree), coefficient(ring.field())});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  // Nonzero polynomial of exact bidegree (a, b).
  Polynomial bihomogeneous(const BigradedRing& ring, std::uint32_t a, std::uint32_t b, int max_terms) {
    const auto m = static_cast<std::size_t>(ring.m());
    const auto xs = block_monomials(ring.nvars(), 0, m, a);
    const auto ys = block_monomials(ring.nvars(), m, ring.nvars(), b);
    for (;;) {
      std::vector<Term> terms;
      const int k = uniform(1, max_terms);
      for (int i = 0; i < k; ++i) {
        const auto& u = xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
        const auto& v = ys[static_cast<std::size_t>(uniform(0, static_cast<int>(ys.size()) - 1))];
        terms.push_back(Term{u * v, coefficient(ring.field())});
      }
      Polynomial p = Polynomial::from_terms(ring, std::move(terms));
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bicm::testing

namespace doctest {
template <>
struct StringMaker<bicm::Polynomial> {
  static String convert(const bicm::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<bicm::Ideal> {
  static String convert(const bicm::Ideal& i) { return i.canonical_string().c_str(); }
};
}  // namespace doctest
