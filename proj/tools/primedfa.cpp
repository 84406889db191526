// primedfa: command-line front end over the library.
//
// Structured results go to stdout as JSON; diagnostics go to stderr.
// Exit codes: 0 success, 1 usage, 2 malformed or unsuitable input,
// 3 inconclusive or out of budget.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primedfa/classify.hpp"
#include "primedfa/decompose.hpp"
#include "primedfa/dfa.hpp"
#include "primedfa/oracle.hpp"
#include "primedfa/primality.hpp"
#include "primedfa/reduction.hpp"

namespace fs = std::filesystem;
using namespace primedfa;
using ojson = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

// Output goes to `path` when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::string pretty(const ojson& j) { return j.dump(2) + "\n"; }

Dfa load_dfa(const std::string& path) { return parse_dfa(read_file(path)); }

std::size_t state_budget() {
  if (const char* env = std::getenv("PRIMEDFA_STATE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "primedfa: ignoring invalid PRIMEDFA_STATE_BUDGET=" << env << "\n";
  }
  return kDefaultStateBudget;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::WordNotMaxVisiting:
    case ErrorCode::EqualPumpSymbols:
    case ErrorCode::UnaryPowerWord:
    case ErrorCode::NoPumpablePair:
      return 1;
    case ErrorCode::Inconclusive:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::RetriesExhausted:
      return 3;
    default:
      return 2;
  }
}

int report_error(std::string_view code, const std::string& message, const std::string& file,
                 std::optional<std::size_t> position, int status) {
  ojson err;
  err["code"] = code;
  err["message"] = message;
  if (!file.empty()) err["file"] = file;
  if (position) err["position"] = *position;
  std::cout << ojson{{"error", err}}.dump() << "\n";
  std::cerr << "primedfa: " << code << ": ";
  if (!file.empty()) std::cerr << file << ": ";
  std::cerr << message;
  if (position) std::cerr << " (at " << *position << ")";
  std::cerr << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primality, decomposition and the CNF reduction for linear safety DFAs"};
  app.require_subcommand(1, 1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Threads for the parallel kernels")
      ->check(CLI::PositiveNumber);

  std::string input;
  std::string output;
  std::string current_file;
  int status = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Report structural properties of a DFA");
  classify_cmd->add_option("dfa", input, "DFA JSON file")->required();
  bool profile = false;
  classify_cmd->add_flag("--profile", profile, "Include the linear profile when applicable");

  auto* minimize_cmd = app.add_subcommand("minimize", "Write the canonical minimal DFA");
  minimize_cmd->add_option("dfa", input, "DFA JSON file")->required();
  minimize_cmd->add_option("-o,--output", output, "Output file");

  auto* prime_cmd = app.add_subcommand("prime", "Decide primality");
  prime_cmd->add_option("dfa", input, "DFA JSON file")->required();
  std::string method = "mls";
  prime_cmd->add_option("--method", method, "Decision method")
      ->check(CLI::IsMember({"mls", "brute-general", "brute-safety"}));
  std::optional<std::uint64_t> max_words;
  prime_cmd->add_option("--max-words", max_words, "Max-visiting words to examine")
      ->check(CLI::PositiveNumber);
  std::optional<std::uint64_t> candidate_budget;
  prime_cmd->add_option("--candidate-budget", candidate_budget, "Candidate DFAs to enumerate")
      ->check(CLI::PositiveNumber);
  std::optional<std::size_t> size_bound;
  prime_cmd->add_option("--size-bound", size_bound, "Largest candidate size for brute force")
      ->check(CLI::PositiveNumber);

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a composite MLS ADFA+");
  decompose_cmd->add_option("dfa", input, "DFA JSON file")->required();
  decompose_cmd->add_option("-o,--output", output, "Directory for part_NNN.json and manifest");
  bool verify = true;
  decompose_cmd->add_flag("--verify,!--no-verify", verify, "Check the decomposition");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the CNF-DFA of a DIMACS formula");
  reduce_cmd->add_option("cnf", input, "DIMACS CNF file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output file");

  auto* sat_cmd = app.add_subcommand("sat", "Solve a DIMACS formula through primality");
  sat_cmd->add_option("cnf", input, "DIMACS CNF file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random MLS ADFA+");
  GenConfig gen;
  gen_cmd->add_option("--lin", gen.lin, "Longest live path")->required();
  gen_cmd->add_option("--alphabet", gen.alphabet_size, "Alphabet size")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--max-retries", gen.max_retries, "Attempts before giving up");
  gen_cmd->add_option("-o,--output", output, "Output file");

  auto* pump_cmd = app.add_subcommand("pump", "Print a pumping of a word");
  pump_cmd->add_option("dfa", input, "DFA JSON file supplying the alphabet")->required();
  std::string word;
  std::size_t pi = 0;
  std::size_t pj = 0;
  std::size_t pl = 0;
  pump_cmd->add_option("--word", word, "Word to pump")->required();
  pump_cmd->add_option("-i", pi, "Start of the pumped factor (1-based)")->required();
  pump_cmd->add_option("-j", pj, "End of the pumped factor, exclusive")->required();
  pump_cmd->add_option("-l", pl, "Repetitions")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("Usage", e.what(), "", std::nullopt, 1);
  }

  try {
    current_file = input;
    const std::size_t budget = state_budget();

    if (*classify_cmd) {
      const Dfa dfa = load_dfa(input);
      const ClassReport report = classify(dfa);
      ojson out = to_json(report);
      if (profile) {
        out["profile"] =
            report.is_mls_adfa_plus ? to_json(linear_profile(dfa), dfa) : ojson(nullptr);
      }
      std::cout << pretty(out);
    } else if (*minimize_cmd) {
      emit(output, serialize(minimize(load_dfa(input))));
    } else if (*prime_cmd) {
      const Dfa dfa = load_dfa(input);
      PrimalityVerdict verdict;
      if (method == "mls") {
        verdict = decide_primality_mls(dfa, PrimalityOptions{max_words, jobs});
      } else {
        OracleConfig cfg;
        cfg.mode = method == "brute-general" ? OracleMode::General : OracleMode::SafetyRestricted;
        cfg.size_bound = size_bound;
        if (candidate_budget) cfg.candidate_budget = *candidate_budget;
        cfg.jobs = jobs;
        cfg.state_budget = budget;
        verdict = brute_force_composite(dfa, cfg);
      }
      std::cout << pretty(to_json(verdict));
      if (verdict.verdict == Verdict::Inconclusive) status = 3;
    } else if (*decompose_cmd) {
      const Dfa dfa = load_dfa(input);
      DecomposeOptions opts;
      opts.primality = PrimalityOptions{std::nullopt, jobs};
      opts.verify = verify;
      opts.state_budget = budget;
      const Decomposition d = decompose_mls(dfa, opts);
      ojson manifest;
      manifest["source_index"] = index(dfa);
      manifest["verified"] = verify ? ojson(d.verified) : ojson(nullptr);
      ojson parts = ojson::array();
      if (!output.empty()) fs::create_directories(output);
      for (std::size_t p = 0; p < d.parts.size(); ++p) {
        char name[32];
        std::snprintf(name, sizeof name, "part_%03zu.json", p);
        ojson entry;
        entry["file"] = name;
        entry["num_states"] = d.parts[p].num_states();
        entry["provenance"] = to_json(d.provenance[p]);
        parts.push_back(std::move(entry));
        if (!output.empty()) write_file(fs::path(output) / name, serialize(d.parts[p]));
      }
      manifest["parts"] = std::move(parts);
      if (!output.empty()) write_file(fs::path(output) / "manifest.json", pretty(manifest));
      std::cout << pretty(manifest);
      if (verify && !d.verified) {
        return report_error("InternalInconsistency", "decomposition failed verification", input,
                            std::nullopt, 2);
      }
    } else if (*reduce_cmd) {
      const CnfFormula f = parse_dimacs(read_file(input));
      const auto n = normalize(f);
      if (std::holds_alternative<TriviallySat>(n)) {
        throw Error(ErrorCode::TriviallySat, "every clause is a tautology; no CNF-DFA exists");
      }
      emit(output, serialize(build_cnf_dfa(std::get<NormalizedCnf>(n))));
    } else if (*sat_cmd) {
      const CnfFormula f = parse_dimacs(read_file(input));
      const auto a = solve_sat_via_primality(f, PrimalityOptions{std::nullopt, jobs});
      if (!a) {
        std::cout << "UNSAT\n";
      } else {
        std::cout << "SAT\nv";
        for (std::size_t i = 0; i < a->bits.size(); ++i) {
          std::cout << ' ' << (a->bits[i] == '1' ? "" : "-") << i + 1;
        }
        std::cout << " 0\n";
      }
    } else if (*gen_cmd) {
      current_file.clear();
      emit(output, serialize(generate_mls(gen)));
    } else if (*pump_cmd) {
      const Dfa dfa = load_dfa(input);
      for (std::size_t p = 0; p < word.size(); ++p) {
        if (!dfa.symbol_index(word[p])) {
          throw Error(ErrorCode::UnknownSymbol,
                      std::string("symbol '") + word[p] + "' is not in the alphabet", p);
        }
      }
      std::cout << pump(word, pi, pj, pl) << "\n";
    }
  } catch (const Error& e) {
    return report_error(to_string(e.code()), e.what(), current_file, e.position(),
                        exit_code(e.code()));
  } catch (const std::exception& e) {
    return report_error("Io", e.what(), current_file, std::nullopt, 2);
  }
  return status;
}
