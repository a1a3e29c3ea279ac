#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bicm/groebner.hpp"
#include "bicm/relcm.hpp"

namespace bicm {

struct PrimaryComponent {
  Ideal primary;
  Ideal radical;  // generated by a subset of the variables
  int cd_value = 0;
};

// Irredundant, one component per radical. Components sorted by radical
// (fewer variables first, then by variable index).
struct PrimaryDecomposition {
  std::vector<PrimaryComponent> components;
};

// Throws NotMonomial unless every generator is a monomial; UnitIdeal for (1).
// The zero ideal decomposes as the single component (0).
PrimaryDecomposition monomial_primary_decomposition(const Ideal& i, VariableBlock block = VariableBlock::Q);

// Number of block variables outside the prime. Throws InvalidArgument unless
// the ideal is generated by variables.
int cd_of_prime(const Ideal& radical, VariableBlock block);

// I = D_0 ⊊ D_1 ⊊ ... ⊊ D_r = (1) with D_i the intersection of the components
// of cd greater than c_i, and D_{i-1} = D_i ∩ E_i.
struct DimensionFiltration {
  VariableBlock block = VariableBlock::Q;
  PrimaryDecomposition decomposition;
  std::vector<Ideal> chain;               // D_0 .. D_r
  std::vector<int> cds;                   // c_1 < ... < c_r
  std::vector<Ideal> level_parts;         // E_1 .. E_r
  std::vector<std::vector<Ideal>> level_primes;  // radicals of E_i's components
};

DimensionFiltration dimension_filtration(const Ideal& i, VariableBlock block);

struct LevelRecord {
  IdealPair quotient;  // isomorphic to M_i / M_{i-1}
  int cd = 0;
  int grade = 0;
  bool relative_cm = false;
  std::vector<Polynomial> regular_sequence;
  std::vector<Ideal> primes;  // Ass of the quotient when known (monomial input)
};

// Chain of ideals I = D_0 ⊊ ... ⊊ D_r = (1), i.e. 0 = M_0 ⊊ ... ⊊ M_r = S/I
// with M_i = D_i / I, and one record per quotient.
struct CMFiltration {
  VariableBlock block = VariableBlock::Q;
  std::vector<Ideal> chain;
  std::vector<LevelRecord> levels;
  std::optional<std::size_t> failed_level;  // first level that is not relative CM
};

enum class Route { RelativeCM, CdAtMostOne, MonomialFiltration, HypersurfaceRank1, UnmixedShortcut };

std::string_view to_string(Route route) noexcept;

struct SeqCMVerdict {
  bool decision = false;
  Route route = Route::RelativeCM;
  CMFiltration filtration;
};

// Decides sequential Cohen-Macaulayness of S/I with respect to the block.
// Routes in order: relative CM, cd <= 1 (both for any ideal), then monomial
// ideals (unmixed shortcut, else the dimension filtration), then principal
// bihomogeneous ideals through the hypersurface classifier. Anything else
// throws UnsupportedIdealClass.
SeqCMVerdict is_seq_cm(const Ideal& i, VariableBlock block, std::uint64_t seed);

struct TensorCheck {
  bool lhs = false;  // S/(I_x + I_y) w.r.t. Q
  bool rhs = false;  // K[y]/I_y w.r.t. its maximal ideal
};

// Both ideals live in the same ring; I_x uses only x-variables and I_y only
// y-variables.
TensorCheck tensor_split_check(const Ideal& i_x, const Ideal& i_y, std::uint64_t seed);

// Associated primes of the quotient at `level` (0-based) of a verified
// filtration.
const std::vector<Ideal>& quotient_associated_primes(const CMFiltration& filtration, std::size_t level);

}  // namespace bicm
