#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bicm/groebner.hpp"
#include "bicm/polynomial.hpp"

namespace bicm {

// P = (x1..xm), Q = (y1..yn), M = P + Q.
enum class VariableBlock { P, Q, M };

std::string_view to_string(VariableBlock block) noexcept;
VariableBlock parse_block(std::string_view text);  // "P", "Q", "m"/"M"

std::vector<std::size_t> block_variables(const BigradedRing& ring, VariableBlock block);
Ideal block_ideal(const BigradedRing& ring, VariableBlock block);
// The block whose ideal is quotiented out when measuring cd: Q -> P, P -> Q.
// For M there is none.
VariableBlock complementary(VariableBlock block) noexcept;

// The module A/B for ideals B ⊆ A. S/I is the pair ((1), I).
class IdealPair {
 public:
  IdealPair(Ideal a, Ideal b);  // throws InvalidArgument unless B ⊆ A
  static IdealPair cyclic(const Ideal& i);

  const Ideal& a() const noexcept { return a_; }
  const Ideal& b() const noexcept { return b_; }
  const BigradedRing& ring() const noexcept { return a_.ring(); }

  bool is_cyclic() const;  // A = (1)
  bool is_zero() const;    // A ⊆ B

  std::string to_string() const;

 private:
  Ideal a_;
  Ideal b_;
};

// cd of S/I with respect to a block through dimension counting:
// Q -> dim S/(I + P), P -> dim S/(I + Q), M -> dim S/I.
// Throws ZeroModule for the unit ideal.
int cd_wrt(const Ideal& i, VariableBlock block);

// H^0_block(A/B) = (sat(B, block) ∩ A)/B vanishes.
bool h0_is_zero(const IdealPair& pair, VariableBlock block);

// ℓ is a nonzerodivisor on A/B: (B : ℓ) ∩ A ⊆ B.
bool is_regular_on(const Polynomial& l, const IdealPair& pair);

inline constexpr int kRegularFormRetries = 32;

// Random linear form in the block variables regular on A/B. Coefficients come
// from a deterministic stream seeded by `seed`; the range widens on retry.
// Throws NoRegularForm after the retry budget.
Polynomial find_regular_linear_form(const IdealPair& pair, VariableBlock block, std::uint64_t seed);

struct GradeResult {
  int grade = 0;
  std::vector<Polynomial> regular_sequence;
};

GradeResult grade_wrt(const IdealPair& pair, VariableBlock block, std::uint64_t seed);

struct CdHints {
  // S/B is relatively unmixed w.r.t. the block (all associated primes share
  // one cd). Lets cd(A/B) = cd(S/B) for any nonzero submodule A/B.
  bool ambient_unmixed = false;
};

// cd of A/B by explicit rules: (i) cyclic pair (A principal, A/B ≅ S/(B : a)),
// (ii) cd(S/B) > cd(S/A) from 0 -> A/B -> S/B -> S/A -> 0, (iii) ambient
// unmixed hint. Throws UndecidableByRules otherwise; never guesses.
int cd_subquotient(const IdealPair& pair, VariableBlock block, const CdHints& hints = {});

// cd of A/B computed directly as dim (A/B)/J(A/B) with J the complementary
// block ideal: the Krull dimension of S/((B + J·A) : A). Total on nonzero
// pairs; used for independent certificate checks.
int cd_by_annihilator(const IdealPair& pair, VariableBlock block);

struct CdGradeReport {
  int cd = 0;
  int grade = 0;
  bool relative_cm = false;
  std::vector<Polynomial> regular_sequence;
};

CdGradeReport is_relative_cm(const IdealPair& pair, VariableBlock block, std::uint64_t seed,
                             const CdHints& hints = {});

}  // namespace bicm
