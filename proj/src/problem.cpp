#include "bicm/problem.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "bicm/error.hpp"

namespace bicm {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& message, int line, int column) {
  throw ParseError(kind, message, line, column);
}

std::uint64_t parse_unsigned(std::string_view text, int line, int column, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::Parse, "expected a nonnegative integer for " + std::string(what) + ", got '" + std::string(text) + "'",
         line, column);
  }
  return value;
}

std::pair<std::string_view, std::string_view> key_value(const Token& t, int line) {
  const std::size_t eq = t.text.find('=');
  if (eq == std::string_view::npos || eq == 0) fail(ErrorKind::Parse, "expected key=value, got '" + std::string(t.text) + "'", line, t.column);
  return {t.text.substr(0, eq), t.text.substr(eq + 1)};
}

Field parse_field(std::string_view text, int line, int column) {
  if (text == "QQ") return Field::rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    const auto p = parse_unsigned(text.substr(3, text.size() - 4), line, column + 3, "the characteristic");
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      fail(ErrorKind::Semantic, e.what(), line, column);
    }
  }
  fail(ErrorKind::Parse, "unknown field '" + std::string(text) + "' (expected QQ or GF(p))", line, column);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::optional<BigradedRing> ring;
  std::vector<Polynomial> gens;
  bool have_ideal = false;
  bool continuing = false;
  int ideal_line = 0;
  std::optional<std::uint64_t> seed;
  std::optional<VariableBlock> wrt;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto words = split_words(line);
    if (words.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const std::string_view keyword = words.front().text;

    std::string_view segment;
    int offset = 0;
    if (keyword == "ring") {
      if (continuing) fail(ErrorKind::Parse, "ideal continues past a trailing comma", line_no, words.front().column);
      if (ring) fail(ErrorKind::Parse, "duplicate ring line", line_no, words.front().column);
      std::optional<std::uint64_t> m;
      std::optional<std::uint64_t> n;
      Field field = Field::rationals();
      for (std::size_t k = 1; k < words.size(); ++k) {
        const auto [key, value] = key_value(words[k], line_no);
        const int vcol = words[k].column + static_cast<int>(key.size()) + 1;
        if (key == "m") {
          m = parse_unsigned(value, line_no, vcol, "m");
        } else if (key == "n") {
          n = parse_unsigned(value, line_no, vcol, "n");
        } else if (key == "field") {
          field = parse_field(value, line_no, vcol);
        } else {
          fail(ErrorKind::Parse, "unknown ring attribute '" + std::string(key) + "'", line_no, words[k].column);
        }
      }
      if (!m || !n) fail(ErrorKind::Parse, "ring line needs m= and n=", line_no, words.front().column);
      try {
        ring.emplace(static_cast<int>(std::min<std::uint64_t>(*m, 1000)), static_cast<int>(std::min<std::uint64_t>(*n, 1000)), field);
      } catch (const Error& e) {
        fail(ErrorKind::Semantic, e.what(), line_no, words.front().column);
      }
      continue;
    }
    if (keyword == "option") {
      if (continuing) fail(ErrorKind::Parse, "ideal continues past a trailing comma", line_no, words.front().column);
      for (std::size_t k = 1; k < words.size(); ++k) {
        const auto [key, value] = key_value(words[k], line_no);
        const int vcol = words[k].column + static_cast<int>(key.size()) + 1;
        if (key == "seed") {
          seed = parse_unsigned(value, line_no, vcol, "seed");
        } else if (key == "wrt") {
          try {
            wrt = parse_block(value);
          } catch (const Error& e) {
            fail(ErrorKind::Parse, e.what(), line_no, vcol);
          }
        } else {
          fail(ErrorKind::Parse, "unknown option '" + std::string(key) + "'", line_no, words[k].column);
        }
      }
      continue;
    }
    if (keyword == "ideal") {
      if (continuing) fail(ErrorKind::Parse, "ideal continues past a trailing comma", line_no, words.front().column);
      if (have_ideal) fail(ErrorKind::Parse, "duplicate ideal line", line_no, words.front().column);
      if (!ring) fail(ErrorKind::Semantic, "ideal given before the ring line", line_no, words.front().column);
      have_ideal = true;
      ideal_line = line_no;
      offset = words.front().column - 1 + 5;
      segment = line.substr(static_cast<std::size_t>(offset));
    } else if (continuing) {
      segment = line;
    } else {
      fail(ErrorKind::Parse, "unknown keyword '" + std::string(keyword) + "'", line_no, words.front().column);
    }

    // Trailing comma: the list goes on next line.
    std::size_t last = segment.find_last_not_of(" \t");
    continuing = last == std::string_view::npos || segment[last] == ',';
    if (last != std::string_view::npos && segment[last] == ',') segment = segment.substr(0, last);
    if (segment.find_first_not_of(" \t") != std::string_view::npos) {
      auto parsed = parse_polynomial_list(*ring, segment, line_no, offset);
      gens.insert(gens.end(), std::make_move_iterator(parsed.begin()), std::make_move_iterator(parsed.end()));
    }
    if (pos > text.size()) break;
  }

  if (!ring) fail(ErrorKind::Semantic, "missing ring line", 1, 1);
  if (!have_ideal) fail(ErrorKind::Semantic, "missing ideal line", line_no, 1);
  if (continuing) fail(ErrorKind::Parse, "ideal ends with a trailing comma", line_no, 1);
  Ideal ideal(*ring, std::move(gens));
  if (ideal.is_unit()) fail(ErrorKind::Semantic, "the ideal is the unit ideal, so S/I is zero", ideal_line, 1);
  return ProblemFile{*ring, std::move(ideal), seed, wrt};
}

}  // namespace bicm
