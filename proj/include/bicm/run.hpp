#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bicm/error.hpp"
#include "bicm/problem.hpp"
#include "bicm/relcm.hpp"

namespace bicm {

enum class Command { Gb, Dim, Cd, Grade, Depth, RelCM, PrimDec, Filtration, SeqCM, Hypersurface, TensorCheck };

std::string_view to_string(Command command) noexcept;
std::optional<Command> parse_command(std::string_view text) noexcept;

enum class OutputFormat { Json, Text };

// Flags override the problem file's options; defaults are block Q, seed 0.
struct RunOptions {
  std::optional<VariableBlock> wrt;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::Json;
  bool verify = false;
};

inline constexpr int kExitDecided = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitInternal = 4;

int exit_code_for(ErrorKind kind) noexcept;

struct RunResult {
  int exit_code = kExitDecided;
  std::string document;  // serialized in the requested format, newline-terminated
};

// Parses `problem_text` and runs the command. Never throws for bad input:
// errors become a document with an "error" object and the matching exit code.
RunResult run(Command command, std::string_view problem_text, const RunOptions& options);

// 64-bit FNV-1a of the raw problem text, as 16 hex digits.
std::string input_hash(std::string_view text);

}  // namespace bicm
