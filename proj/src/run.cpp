#include "bicm/run.hpp"

#include <array>
#include <cstdio>

#include "json.hpp"

#include "bicm/filtration.hpp"
#include "bicm/hypersurface.hpp"

namespace bicm {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Command, std::string_view>, 11> kCommands{{
    {Command::Gb, "gb"},
    {Command::Dim, "dim"},
    {Command::Cd, "cd"},
    {Command::Grade, "grade"},
    {Command::Depth, "depth"},
    {Command::RelCM, "relcm"},
    {Command::PrimDec, "primdec"},
    {Command::Filtration, "filtration"},
    {Command::SeqCM, "seqcm"},
    {Command::Hypersurface, "hypersurface"},
    {Command::TensorCheck, "tensorcheck"},
}};

Json polys_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

// Reduced Groebner basis as the canonical printed form of an ideal.
Json ideal_json(const Ideal& i) { return polys_json(i.groebner_basis()); }

Ideal ideal_from_json(const BigradedRing& ring, const Json& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(ring, g.get<std::string>()));
  return Ideal(ring, std::move(polys));
}

Json ideals_json(const std::vector<Ideal>& ideals) {
  Json out = Json::array();
  for (const auto& i : ideals) out.push_back(ideal_json(i));
  return out;
}

Json filtration_json(const CMFiltration& f) {
  Json levels = Json::array();
  for (const auto& level : f.levels) {
    Json l;
    l["quotient"] = {{"a", ideal_json(level.quotient.a())}, {"b", ideal_json(level.quotient.b())}};
    l["cd"] = level.cd;
    l["grade"] = level.grade;
    l["relative_cm"] = level.relative_cm;
    l["regular_sequence"] = polys_json(level.regular_sequence);
    if (!level.primes.empty()) l["associated_primes"] = ideals_json(level.primes);
    levels.push_back(std::move(l));
  }
  Json out;
  out["chain"] = ideals_json(f.chain);
  out["levels"] = std::move(levels);
  out["failed_level"] = f.failed_level ? Json(*f.failed_level) : Json(nullptr);
  return out;
}

// Re-derives every level of an emitted certificate from its printed ideals.
Json verify_certificate(const BigradedRing& ring, const Ideal& input, const Json& cert, bool decision,
                        VariableBlock block, std::uint64_t seed) {
  bool ok = true;
  std::vector<Ideal> chain;
  for (const auto& gens : cert.at("chain")) chain.push_back(ideal_from_json(ring, gens));
  ok = ok && chain.size() >= 2 && chain.front() == input && chain.back().is_unit();
  for (std::size_t k = 1; k < chain.size(); ++k) {
    ok = ok && chain[k].contains(chain[k - 1]) && !chain[k - 1].contains(chain[k]);
  }
  Json levels = Json::array();
  const auto& recorded = cert.at("levels");
  ok = ok && recorded.size() + 1 == chain.size();
  int previous_cd = -1;
  for (std::size_t k = 0; k < recorded.size() && k + 1 < chain.size(); ++k) {
    const auto& level = recorded[k];
    const Ideal a = ideal_from_json(ring, level.at("quotient").at("a"));
    const Ideal b = ideal_from_json(ring, level.at("quotient").at("b"));
    // A/B ≅ D_k/D_{k-1} needs A = D_k + B and D_{k-1} = D_k ∩ B.
    bool level_ok = a == chain[k + 1] + b && intersect(chain[k + 1], b) == chain[k];
    const IdealPair pair(a, b);
    const int cd = cd_by_annihilator(pair, block);
    const int grade = grade_wrt(pair, block, seed).grade;
    level_ok = level_ok && cd == level.at("cd").get<int>() && grade == level.at("grade").get<int>() &&
               (grade == cd) == level.at("relative_cm").get<bool>();
    if (decision) level_ok = level_ok && grade == cd && cd > previous_cd;
    previous_cd = cd;
    ok = ok && level_ok;
    levels.push_back({{"cd", cd}, {"grade", grade}, {"ok", level_ok}});
  }
  return {{"ok", ok}, {"levels", std::move(levels)}};
}

Json decomposition_json(const PrimaryDecomposition& d) {
  Json out = Json::array();
  for (const auto& c : d.components) {
    out.push_back({{"primary", ideal_json(c.primary)}, {"radical", ideal_json(c.radical)}, {"cd", c.cd_value}});
  }
  return out;
}

const Polynomial& hypersurface_generator(const Ideal& i) {
  if (!i.is_principal() || !i.groebner_basis().front().is_bihomogeneous()) {
    throw Error(ErrorKind::UnsupportedIdealClass,
                "the hypersurface command needs a principal ideal generated by a bihomogeneous polynomial");
  }
  return i.groebner_basis().front();
}

struct Context {
  const ProblemFile& problem;
  VariableBlock block;
  std::uint64_t seed;
  bool verify;
};

Json seqcm_result(const Context& ctx) {
  const SeqCMVerdict v = is_seq_cm(ctx.problem.ideal, ctx.block, ctx.seed);
  const CdGradeReport whole = is_relative_cm(IdealPair::cyclic(ctx.problem.ideal), ctx.block, ctx.seed);
  Json r;
  r["decision"] = v.decision;
  r["route"] = std::string(to_string(v.route));
  r["cd"] = whole.cd;
  r["grade"] = whole.grade;
  r["filtration"] = filtration_json(v.filtration);
  if (ctx.verify) {
    r["verification"] = verify_certificate(ctx.problem.ring, ctx.problem.ideal, r["filtration"], v.decision,
                                           ctx.block, ctx.seed);
  }
  return r;
}

Json hypersurface_result(const Context& ctx) {
  const Polynomial& f = hypersurface_generator(ctx.problem.ideal);
  if (ctx.block == VariableBlock::M) {
    throw Error(ErrorKind::InvalidArgument, "the hypersurface classification is with respect to P or Q");
  }
  const auto matrix = coefficient_matrix(f);
  const auto split = rank_one_split(f);
  const auto stats = hypersurface_stats(f, ctx.seed);
  const auto verdict = classify_hypersurface(f, ctx.block, ctx.seed);
  Json r;
  r["polynomial"] = f.to_string();
  r["bidegree"] = {matrix.bidegree.a, matrix.bidegree.b};
  Json rows = Json::array();
  Json cols = Json::array();
  for (const auto& m : matrix.rows) rows.push_back(Polynomial::term(f.ring(), m, FieldElement::one(f.ring().field())).to_string());
  for (const auto& m : matrix.columns) cols.push_back(Polynomial::term(f.ring(), m, FieldElement::one(f.ring().field())).to_string());
  r["matrix"] = {{"rows", rows}, {"columns", cols}, {"rank", exact_rank(matrix)}};
  r["split"] = split ? Json{{"h1", split->h1.to_string()}, {"h2", split->h2.to_string()}} : Json(nullptr);
  r["invariants"] = {{"grade_p", stats.grade_p}, {"cd_p", stats.cd_p}, {"grade_q", stats.grade_q}, {"cd_q", stats.cd_q}};
  r["decision"] = verdict.decision;
  r["route"] = std::string(to_string(verdict.route));
  r["filtration"] = filtration_json(verdict.filtration);
  if (ctx.verify) {
    r["verification"] = verify_certificate(ctx.problem.ring, ctx.problem.ideal, r["filtration"], verdict.decision,
                                           ctx.block, ctx.seed);
  }
  return r;
}

Json tensorcheck_result(const Context& ctx) {
  const BigradedRing& ring = ctx.problem.ring;
  std::vector<Polynomial> xs;
  std::vector<Polynomial> ys;
  for (const auto& g : ctx.problem.ideal.generators()) {
    if (g.uses_only_x()) {
      xs.push_back(g);
    } else if (g.uses_only_y()) {
      ys.push_back(g);
    } else {
      throw Error(ErrorKind::UnsupportedIdealClass, "tensorcheck needs generators in one block each: " + g.to_string());
    }
  }
  const Ideal ix(ring, xs);
  const Ideal iy(ring, ys);
  const TensorCheck t = tensor_split_check(ix, iy, ctx.seed);
  return {{"i_x", ideal_json(ix)}, {"i_y", ideal_json(iy)}, {"lhs", t.lhs}, {"rhs", t.rhs}, {"agree", t.lhs == t.rhs}};
}

Json compute(Command command, const Context& ctx) {
  const Ideal& i = ctx.problem.ideal;
  switch (command) {
    case Command::Gb:
      return {{"groebner_basis", ideal_json(i)}};
    case Command::Dim:
      return {{"dim", krull_dim(i)}};
    case Command::Cd:
      return {{"cd", cd_wrt(i, ctx.block)}};
    case Command::Grade:
    case Command::Depth: {
      const auto g = grade_wrt(IdealPair::cyclic(i), ctx.block, ctx.seed);
      return {{command == Command::Depth ? "depth" : "grade", g.grade},
              {"regular_sequence", polys_json(g.regular_sequence)}};
    }
    case Command::RelCM: {
      const auto r = is_relative_cm(IdealPair::cyclic(i), ctx.block, ctx.seed);
      return {{"cd", r.cd}, {"grade", r.grade}, {"relative_cm", r.relative_cm},
              {"regular_sequence", polys_json(r.regular_sequence)}};
    }
    case Command::PrimDec:
      return {{"components", decomposition_json(monomial_primary_decomposition(i, ctx.block))}};
    case Command::Filtration: {
      const auto df = dimension_filtration(i, ctx.block);
      Json levels = Json::array();
      for (std::size_t k = 0; k < df.cds.size(); ++k) {
        levels.push_back({{"cd", df.cds[k]}, {"part", ideal_json(df.level_parts[k])},
                          {"associated_primes", ideals_json(df.level_primes[k])}});
      }
      return {{"components", decomposition_json(df.decomposition)}, {"chain", ideals_json(df.chain)},
              {"levels", std::move(levels)}};
    }
    case Command::SeqCM:
      return seqcm_result(ctx);
    case Command::Hypersurface:
      return hypersurface_result(ctx);
    case Command::TensorCheck:
      return tensorcheck_result(ctx);
  }
  return {};
}

void flatten(const Json& value, const std::string& path, std::string& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) flatten(child, path.empty() ? key : path + "." + key, out);
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
    if (!scalars) {
      for (std::size_t k = 0; k < value.size(); ++k) flatten(value[k], path + "." + std::to_string(k), out);
      return;
    }
    out += path + ": [";
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (k) out += ", ";
      out += value[k].is_string() ? value[k].get<std::string>() : value[k].dump();
    }
    out += "]\n";
    return;
  }
  out += path + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
}

std::string serialize(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::string out;
  flatten(doc, "", out);
  return out;
}

}  // namespace

std::string_view to_string(Command command) noexcept {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view text) noexcept {
  for (const auto& [c, name] : kCommands) {
    if (name == text) return c;
  }
  return std::nullopt;
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Semantic:
      return kExitParse;
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnitIdeal:
    case ErrorKind::ZeroModule:
    case ErrorKind::NotBihomogeneous:
    case ErrorKind::NotMonomial:
    case ErrorKind::UnsupportedIdealClass:
    case ErrorKind::UndecidableByRules:
    case ErrorKind::NoRegularForm:
      return kExitUnsupported;
    case ErrorKind::RingMismatch:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::CertificateVerificationFailed:
      return kExitInternal;
  }
  return kExitInternal;
}

std::string input_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunResult run(Command command, std::string_view problem_text, const RunOptions& options) {
  Json doc;
  doc["command"] = std::string(to_string(command));
  doc["input_hash"] = input_hash(problem_text);
  RunResult result;
  try {
    const ProblemFile problem = parse_problem(problem_text);
    VariableBlock block = options.wrt.value_or(problem.wrt.value_or(VariableBlock::Q));
    if (command == Command::Depth) block = VariableBlock::M;
    if (command == Command::TensorCheck) block = VariableBlock::Q;
    const std::uint64_t seed = options.seed.value_or(problem.seed.value_or(0));
    doc["ring"] = {{"m", problem.ring.m()}, {"n", problem.ring.n()}, {"field", problem.ring.field().name()}};
    doc["ideal"] = polys_json(problem.ideal.generators());
    doc["block"] = std::string(to_string(block));
    doc["seed"] = seed;
    const Context ctx{problem, block, seed, options.verify};
    doc["result"] = compute(command, ctx);
    const Json& r = doc["result"];
    if (r.contains("verification") && !r["verification"]["ok"].get<bool>()) result.exit_code = kExitInternal;
  } catch (const ParseError& e) {
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"line", e.line()},
                    {"column", e.column()}};
    result.exit_code = kExitParse;
  } catch (const Error& e) {
    doc["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    result.exit_code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    doc["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    result.exit_code = kExitInternal;
  }
  doc["exit_code"] = result.exit_code;
  result.document = serialize(doc, options.format);
  return result;
}

}  // namespace bicm
