#include "bicm/bicm.h"

#include <cstring>
#include <memory>
#include <string>

#include "bicm/error.hpp"
#include "bicm/filtration.hpp"
#include "bicm/groebner.hpp"
#include "bicm/relcm.hpp"
#include "bicm/run.hpp"

struct bicm_ring {
  bicm::BigradedRing ring;
};

struct bicm_ideal {
  bicm::Ideal ideal;
};

struct bicm_verdict {
  bicm::SeqCMVerdict verdict;
};

namespace {

thread_local std::string last_error;

bicm_status status_for(bicm::ErrorKind kind) {
  using bicm::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::RingMismatch:
    case ErrorKind::ZeroPolynomial:
      return BICM_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse: return BICM_ERR_PARSE;
    case ErrorKind::Semantic: return BICM_ERR_SEMANTIC;
    case ErrorKind::NotBihomogeneous: return BICM_ERR_NOT_BIHOMOGENEOUS;
    case ErrorKind::NotMonomial: return BICM_ERR_NOT_MONOMIAL;
    case ErrorKind::UnitIdeal: return BICM_ERR_UNIT_IDEAL;
    case ErrorKind::ZeroModule: return BICM_ERR_ZERO_MODULE;
    case ErrorKind::NoRegularForm: return BICM_ERR_NO_REGULAR_FORM;
    case ErrorKind::UndecidableByRules: return BICM_ERR_UNDECIDABLE;
    case ErrorKind::UnsupportedIdealClass: return BICM_ERR_UNSUPPORTED;
    case ErrorKind::CertificateVerificationFailed: return BICM_ERR_VERIFICATION;
  }
  return BICM_ERR_INTERNAL;
}

bicm_status fail(bicm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
bicm_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BICM_OK;
  } catch (const bicm::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BICM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BICM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bicm::VariableBlock to_block(bicm_block block) {
  switch (block) {
    case BICM_BLOCK_P: return bicm::VariableBlock::P;
    case BICM_BLOCK_Q: return bicm::VariableBlock::Q;
    case BICM_BLOCK_M: return bicm::VariableBlock::M;
  }
  throw bicm::Error(bicm::ErrorKind::InvalidArgument, "unknown block tag");
}

#define BICM_REQUIRE(ptr)                                                    \
  do {                                                                       \
    if ((ptr) == nullptr) return fail(BICM_ERR_INVALID_ARGUMENT, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* bicm_version(void) { return "0.1.0"; }

const char* bicm_status_string(bicm_status status) {
  switch (status) {
    case BICM_OK: return "ok";
    case BICM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BICM_ERR_PARSE: return "parse error";
    case BICM_ERR_SEMANTIC: return "semantic error";
    case BICM_ERR_NOT_BIHOMOGENEOUS: return "not bihomogeneous";
    case BICM_ERR_NOT_MONOMIAL: return "not a monomial ideal";
    case BICM_ERR_UNIT_IDEAL: return "unit ideal";
    case BICM_ERR_ZERO_MODULE: return "zero module";
    case BICM_ERR_NO_REGULAR_FORM: return "no regular linear form found";
    case BICM_ERR_UNDECIDABLE: return "undecidable by the cd rules";
    case BICM_ERR_UNSUPPORTED: return "unsupported ideal class";
    case BICM_ERR_VERIFICATION: return "certificate verification failed";
    case BICM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bicm_last_error(void) { return last_error.c_str(); }

bicm_status bicm_ring_new(int m, int n, uint64_t characteristic, bicm_ring** out) {
  BICM_REQUIRE(out);
  return guarded([&] {
    const bicm::Field field = characteristic == 0 ? bicm::Field::rationals() : bicm::Field::prime(characteristic);
    *out = new bicm_ring{bicm::BigradedRing(m, n, field)};
  });
}

void bicm_ring_free(bicm_ring* ring) { delete ring; }

bicm_status bicm_ideal_parse(const bicm_ring* ring, const char* generators, bicm_ideal** out) {
  BICM_REQUIRE(ring);
  BICM_REQUIRE(generators);
  BICM_REQUIRE(out);
  return guarded([&] {
    *out = new bicm_ideal{bicm::Ideal(ring->ring, bicm::parse_polynomial_list(ring->ring, generators))};
  });
}

void bicm_ideal_free(bicm_ideal* ideal) { delete ideal; }

bicm_status bicm_ideal_groebner(const bicm_ideal* ideal, char** out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(out);
  return guarded([&] { *out = copy_string(ideal->ideal.canonical_string()); });
}

bicm_status bicm_ideal_contains(const bicm_ideal* ideal, const char* polynomial, int* out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(polynomial);
  BICM_REQUIRE(out);
  return guarded([&] {
    *out = ideal->ideal.contains(bicm::parse_polynomial(ideal->ideal.ring(), polynomial)) ? 1 : 0;
  });
}

bicm_status bicm_krull_dim(const bicm_ideal* ideal, int* out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(out);
  return guarded([&] { *out = bicm::krull_dim(ideal->ideal); });
}

bicm_status bicm_cd(const bicm_ideal* ideal, bicm_block block, int* out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(out);
  return guarded([&] { *out = bicm::cd_wrt(ideal->ideal, to_block(block)); });
}

bicm_status bicm_grade(const bicm_ideal* ideal, bicm_block block, uint64_t seed, int* out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(out);
  return guarded(
      [&] { *out = bicm::grade_wrt(bicm::IdealPair::cyclic(ideal->ideal), to_block(block), seed).grade; });
}

bicm_status bicm_seq_cm(const bicm_ideal* ideal, bicm_block block, uint64_t seed, bicm_verdict** out) {
  BICM_REQUIRE(ideal);
  BICM_REQUIRE(out);
  return guarded([&] { *out = new bicm_verdict{bicm::is_seq_cm(ideal->ideal, to_block(block), seed)}; });
}

void bicm_verdict_free(bicm_verdict* verdict) { delete verdict; }

int bicm_verdict_decision(const bicm_verdict* verdict) {
  return verdict != nullptr && verdict->verdict.decision ? 1 : 0;
}

const char* bicm_verdict_route(const bicm_verdict* verdict) {
  if (verdict == nullptr) return "";
  return bicm::to_string(verdict->verdict.route).data();
}

size_t bicm_verdict_level_count(const bicm_verdict* verdict) {
  return verdict == nullptr ? 0 : verdict->verdict.filtration.levels.size();
}

bicm_status bicm_verdict_level(const bicm_verdict* verdict, size_t level, int* cd, int* grade, int* relative_cm) {
  BICM_REQUIRE(verdict);
  const auto& levels = verdict->verdict.filtration.levels;
  if (level >= levels.size()) return fail(BICM_ERR_INVALID_ARGUMENT, "level index out of range");
  if (cd != nullptr) *cd = levels[level].cd;
  if (grade != nullptr) *grade = levels[level].grade;
  if (relative_cm != nullptr) *relative_cm = levels[level].relative_cm ? 1 : 0;
  last_error.clear();
  return BICM_OK;
}

bicm_status bicm_run(const char* command, const char* problem_text, const bicm_run_options* options,
                     char** document, int* exit_code) {
  BICM_REQUIRE(command);
  BICM_REQUIRE(problem_text);
  BICM_REQUIRE(document);
  BICM_REQUIRE(exit_code);
  const auto cmd = bicm::parse_command(command);
  if (!cmd) return fail(BICM_ERR_INVALID_ARGUMENT, std::string("unknown command '") + command + "'");
  return guarded([&] {
    bicm::RunOptions opts;
    if (options != nullptr) {
      if (options->wrt != nullptr) opts.wrt = bicm::parse_block(options->wrt);
      if (options->seed_set) opts.seed = options->seed;
      opts.format = options->text_format ? bicm::OutputFormat::Text : bicm::OutputFormat::Json;
      opts.verify = options->verify != 0;
    }
    const bicm::RunResult r = bicm::run(*cmd, problem_text, opts);
    *document = copy_string(r.document);
    *exit_code = r.exit_code;
  });
}

void bicm_string_free(char* s) { std::free(s); }

}  // extern "C"
