#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicm/monomial.hpp"
#include "bicm/polynomial.hpp"

namespace bicm {

namespace detail {
struct IdealState;
}

// Ideal of a bigraded ring given by generators. Immutable; reduced Groebner
// bases are computed lazily and memoized, so copies are cheap and may be
// shared across threads.
class Ideal {
 public:
  explicit Ideal(BigradedRing ring);  // the zero ideal
  Ideal(BigradedRing ring, std::vector<Polynomial> generators);

  static Ideal unit(const BigradedRing& ring);
  // Ideal generated by variables with the given indices.
  static Ideal of_variables(const BigradedRing& ring, const std::vector<std::size_t>& indices);
  static Ideal principal(const Polynomial& f);

  const BigradedRing& ring() const noexcept;
  // Nonzero generators as given.
  const std::vector<Polynomial>& generators() const noexcept;
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_zero() const;
  bool is_unit() const;
  // Monomial ideal: the reduced basis consists of monomials.
  bool is_monomial() const;
  bool is_principal() const;
  // Every generator is a monomial (cheap syntactic check).
  bool has_monomial_generators() const noexcept;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  // Equality of ideals (reduced bases agree).
  friend bool operator==(const Ideal& a, const Ideal& b);

  // "(g1, g2, ...)" over the given generators.
  std::string to_string() const;
  // "(b1, b2, ...)" over the reduced grevlex basis.
  std::string canonical_string() const;

 private:
  std::shared_ptr<const detail::IdealState> state_;
};

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order = MonomialOrder::grevlex());

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order = MonomialOrder::grevlex());

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

// f / g when g divides f exactly, else nullopt. g must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(std::span<const Ideal> ideals);  // empty span is not allowed
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);
Ideal saturation(const Ideal& ideal, const Ideal& by);

// Leading-term ideal under grevlex.
Ideal leading_term_ideal(const Ideal& ideal);

// dim S/I; -1 for the unit ideal (zero ring).
int krull_dim(const Ideal& ideal);

// Drops every memoized basis. Intended for long-running batch use.
void clear_groebner_cache();
std::size_t groebner_cache_size();

}  // namespace bicm
