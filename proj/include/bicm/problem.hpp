#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bicm/groebner.hpp"
#include "bicm/relcm.hpp"

namespace bicm {

// Problem file:
//
//   # comment
//   ring m=2 n=2 field=QQ          (or field=GF(32003))
//   ideal x1*y1 + x2*y2, x1^2      (a trailing comma continues on the next line)
//   option seed=7
//   option wrt=Q
struct ProblemFile {
  BigradedRing ring;
  Ideal ideal;
  std::optional<std::uint64_t> seed;
  std::optional<VariableBlock> wrt;
};

// Throws ParseError (kind Parse or Semantic) carrying line and column.
ProblemFile parse_problem(std::string_view text);

}  // namespace bicm
