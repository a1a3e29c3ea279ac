// Command line front end over the C API.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicm/bicm.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;

const std::vector<std::string> kCommands{"gb",      "dim",        "cd",    "grade",        "depth",      "relcm",
                                         "primdec", "filtration", "seqcm", "hypersurface", "tensorcheck"};

struct Outcome {
  int exit_code = kExitUsage;
  std::string document;
};

bool read_file(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

Outcome run_one(const std::string& command, const std::string& text, const bicm_run_options& options) {
  Outcome outcome;
  char* doc = nullptr;
  const bicm_status status = bicm_run(command.c_str(), text.c_str(), &options, &doc, &outcome.exit_code);
  if (status != BICM_OK) {
    outcome.exit_code = kExitUsage;
    outcome.document = std::string("error: ") + bicm_status_string(status) + ": " + bicm_last_error() + "\n";
    return outcome;
  }
  outcome.document = doc;
  bicm_string_free(doc);
  return outcome;
}

int run_corpus(const std::string& command, const fs::path& dir, unsigned jobs, const bicm_run_options& options) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".bicm") files.push_back(entry.path());
  }
  if (ec) {
    std::cerr << "bicm: cannot read corpus directory " << dir << ": " << ec.message() << "\n";
    return kExitUsage;
  }
  std::sort(files.begin(), files.end());

  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      std::string text;
      if (!read_file(files[k], text)) {
        outcomes[k] = Outcome{kExitUsage, "error: cannot read " + files[k].string() + "\n"};
        continue;
      }
      outcomes[k] = run_one(command, text, options);
    }
  };
  std::vector<std::thread> pool;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int worst = 0;
  if (options.text_format) {
    for (std::size_t k = 0; k < files.size(); ++k) {
      std::cout << "== " << files[k].filename().string() << "\n" << outcomes[k].document;
      worst = std::max(worst, outcomes[k].exit_code);
    }
  } else {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < files.size(); ++k) {
      nlohmann::ordered_json entry;
      entry["file"] = files[k].filename().string();
      entry["exit_code"] = outcomes[k].exit_code;
      auto parsed = nlohmann::ordered_json::parse(outcomes[k].document, nullptr, false);
      entry["document"] = parsed.is_discarded() ? nlohmann::ordered_json(outcomes[k].document) : parsed;
      all.push_back(std::move(entry));
      worst = std::max(worst, outcomes[k].exit_code);
    }
    std::cout << all.dump(2) << "\n";
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Cohen-Macaulay and sequentially Cohen-Macaulay checks for bigraded quotients"};
  app.set_version_flag("--version", std::string(bicm_version()));

  std::string command;
  std::string input = "-";
  std::string wrt;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool verify = false;
  std::string corpus;
  unsigned jobs = 1;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("file", input, "Problem file, '-' for stdin");
  auto* wrt_opt = app.add_option("--wrt", wrt, "Block: P, Q (default) or m")->check(CLI::IsMember({"P", "Q", "m"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the regular-form search (default 0)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", verify, "Recompute every certificate level from the printed ideals");
  auto* corpus_opt = app.add_option("--corpus", corpus, "Run on every *.bicm file in a directory");
  app.add_option("--jobs", jobs, "Parallel workers in corpus mode")->needs(corpus_opt)->check(CLI::Range(1U, 256U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bicm_run_options options{};
  options.wrt = wrt_opt->count() ? wrt.c_str() : nullptr;
  options.seed = seed;
  options.seed_set = seed_opt->count() ? 1 : 0;
  options.text_format = format == "text" ? 1 : 0;
  options.verify = verify ? 1 : 0;

  if (!corpus.empty()) return run_corpus(command, corpus, jobs, options);

  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (!read_file(input, text)) {
    std::cerr << "bicm: cannot read " << input << "\n";
    return kExitUsage;
  }
  const Outcome outcome = run_one(command, text, options);
  (outcome.exit_code == kExitUsage ? std::cerr : std::cout) << outcome.document;
  return outcome.exit_code;
}
