#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bicm {

// Exponent vector over a fixed variable layout.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Sum of exponents over [begin, end).
  std::uint32_t partial_degree(std::size_t begin, std::size_t end) const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  // Bit i set iff variable i occurs (first 64 variables).
  std::uint64_t support_mask() const noexcept;
  std::size_t support_size() const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& divisor) const;  // exact; caller guarantees divisibility
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  // Drops `count` leading variables, or prepends `count` zero exponents.
  Monomial drop_front(std::size_t count) const;
  Monomial extend_front(std::size_t count) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Lexicographic on exponent vectors; layout-independent tie breaking only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Global monomial orders. Variables are compared in index order, so with the
// x-block-then-y-block layout x1 > ... > xm > y1 > ... > yn.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, BlockEliminate };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  // The first `auxiliary` variables form a block that dominates: compare the
  // auxiliary block by grevlex first, then the rest by grevlex.
  static MonomialOrder block_eliminate(std::size_t auxiliary) {
    return MonomialOrder(Kind::BlockEliminate, auxiliary);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t auxiliary() const noexcept { return auxiliary_; }
  std::string tag() const;

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t auxiliary) : kind_(kind), auxiliary_(auxiliary) {}

  Kind kind_;
  std::size_t auxiliary_;
};

}  // namespace bicm
