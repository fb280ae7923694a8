// Command-line surface for the rewriting-to-matching toolkit.
//
// Exit codes: 0 = found / verified / derivable, 1 = negative result,
// 2 = usage or parse error, 3 = budget or fuel exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "homatch/errors.hpp"
#include "homatch/itypes.hpp"
#include "homatch/reduction.hpp"
#include "homatch/solver.hpp"
#include "homatch/ssts.hpp"
#include "homatch/syntax.hpp"
#include "homatch/term.hpp"
#include "homatch/verifier.hpp"
#include "homatch/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw homatch::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw homatch::Error("cannot write '" + path + "'");
  out << content;
}

std::string word_string(const homatch::Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

homatch::Derivation obtain_derivation(const homatch::Ssts& system,
                                       std::size_t n,
                                       const std::string& steps_path,
                                       std::size_t max_states) {
  if (!steps_path.empty())
    return homatch::parse_derivation(read_file(steps_path));
  auto found =
      homatch::decide_for_n(system, n + 1, homatch::SearchLimits{max_states});
  if (!found)
    throw homatch::InvalidWitnessError(
        "0^" + std::to_string(n + 1) + " does not rewrite to 1^" +
        std::to_string(n + 1));
  return *found;
}

int run(int argc, char** argv) {
  CLI::App cli{"higher-order beta-matching workbench"};
  cli.require_subcommand(1);

  // ssts search
  auto* ssts_cmd = cli.add_subcommand("ssts", "simple semi-Thue systems");
  ssts_cmd->require_subcommand(1);
  auto* search_cmd =
      ssts_cmd->add_subcommand("search", "search for 0^n =>* 1^n");
  std::string search_file;
  std::size_t search_max_n = 8;
  std::size_t max_states = 1'000'000;
  search_cmd->add_option("file", search_file, "rule file")->required();
  search_cmd->add_option("--max-n", search_max_n, "largest word length");
  search_cmd->add_option("--max-states", max_states, "BFS state cap");

  // compile
  auto* compile_cmd =
      cli.add_subcommand("compile", "compile rules to a matching instance");
  std::string compile_file, compile_out;
  compile_cmd->add_option("file", compile_file, "rule file")->required();
  compile_cmd->add_option("-o,--output", compile_out, "output path");

  // witness
  auto* witness_cmd =
      cli.add_subcommand("witness", "build a solution term from a derivation");
  std::string witness_file, witness_steps, witness_out;
  std::size_t witness_n = 1;
  witness_cmd->add_option("file", witness_file, "rule file")->required();
  witness_cmd->add_option("--n", witness_n, "witness level (word length n+1)")
      ->required();
  witness_cmd->add_option("--steps", witness_steps, "derivation file");
  witness_cmd->add_option("-o,--output", witness_out, "output path");
  witness_cmd->add_option("--max-states", max_states, "BFS state cap");

  // verify
  auto* verify_cmd =
      cli.add_subcommand("verify", "check a candidate against an instance");
  std::string verify_instance, verify_term;
  std::uint64_t verify_fuel = 0;
  verify_cmd->add_option("instance", verify_instance, "instance JSON")
      ->required();
  verify_cmd->add_option("term", verify_term, "candidate term file")
      ->required();
  verify_cmd->add_option("--fuel", verify_fuel, "normalization budget");

  // diagnose
  auto* diagnose_cmd = cli.add_subcommand(
      "diagnose", "evaluate the five compiled constraints for a candidate");
  std::string diagnose_file, diagnose_term;
  std::uint64_t diagnose_fuel = 0;
  diagnose_cmd->add_option("file", diagnose_file, "rule file")->required();
  diagnose_cmd->add_option("term", diagnose_term, "candidate term file")
      ->required();
  diagnose_cmd->add_option("--fuel", diagnose_fuel, "normalization budget");

  // solve
  auto* solve_cmd =
      cli.add_subcommand("solve", "brute-force search for a solution");
  std::string solve_instance;
  homatch::EnumBudget budget;
  solve_cmd->add_option("instance", solve_instance, "instance JSON")
      ->required();
  solve_cmd->add_option("--max-size", budget.max_size, "term size bound");
  solve_cmd->add_option("--max-count", budget.max_count, "candidate cap");
  solve_cmd->add_option("--fuel", budget.fuel, "normalization budget");

  // normalize
  auto* normalize_cmd = cli.add_subcommand("normalize", "beta-normalize a term");
  std::string normalize_term;
  std::uint64_t normalize_fuel = 1'000'000;
  bool indexed = false;
  normalize_cmd->add_option("term", normalize_term, "term file")->required();
  normalize_cmd->add_option("--fuel", normalize_fuel, "contraction budget");
  normalize_cmd->add_flag("--indexed", indexed, "print de Bruijn indices");

  // typecheck
  auto* typecheck_cmd = cli.add_subcommand("typecheck", "infer or check a type");
  std::string typecheck_term, typecheck_type;
  typecheck_cmd->add_option("term", typecheck_term, "term file")->required();
  typecheck_cmd->add_option("--type", typecheck_type, "type to check against");

  // itype
  auto* itype_cmd = cli.add_subcommand(
      "itype", "emit and check the intersection witness judgments");
  std::string itype_file, itype_steps;
  std::size_t itype_n = 1;
  itype_cmd->add_option("file", itype_file, "rule file")->required();
  itype_cmd->add_option("--n", itype_n, "witness level (word length n+1)")
      ->required();
  itype_cmd->add_option("--steps", itype_steps, "derivation file");
  itype_cmd->add_option("--max-states", max_states, "BFS state cap");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (search_cmd->parsed()) {
    homatch::Ssts system = homatch::parse_ssts(read_file(search_file));
    auto hit = homatch::search_zero_one(system, search_max_n,
                                        homatch::SearchLimits{max_states});
    if (!hit) {
      std::cout << "none\n";
      return kExitNegative;
    }
    std::cout << "n = " << hit->n << "\n";
    std::cout << homatch::print_derivation(hit->steps);
    homatch::Word w = homatch::uniform_word(0, hit->n);
    std::string trace = "# " + word_string(w);
    for (const homatch::Step& s : hit->steps) {
      w = homatch::apply_step(w, system.rules[s.rule - 1], s.position).word;
      trace += " => " + word_string(w);
    }
    std::cout << trace << "\n";
    return kExitOk;
  }

  if (compile_cmd->parsed()) {
    homatch::Ssts system = homatch::parse_ssts(read_file(compile_file));
    homatch::MatchingInstance instance = homatch::compile(system);
    write_output(compile_out, homatch::instance_to_json(instance));
    return kExitOk;
  }

  if (witness_cmd->parsed()) {
    homatch::Ssts system = homatch::parse_ssts(read_file(witness_file));
    homatch::Derivation steps =
        obtain_derivation(system, witness_n, witness_steps, max_states);
    homatch::TermRef term =
        homatch::solution_term(system, witness_n, steps);
    write_output(witness_out, homatch::print_term(term) + "\n");
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    homatch::MatchingInstance instance =
        homatch::instance_from_json(read_file(verify_instance));
    homatch::TermRef candidate = homatch::parse_term(read_file(verify_term));
    homatch::Verdict verdict =
        homatch::verify_solution(instance, candidate, verify_fuel);
    std::cout << homatch::to_string(verdict) << "\n";
    if (verdict.ok()) return kExitOk;
    return verdict.kind == homatch::Verdict::Kind::undetermined ? kExitBudget
                                                                : kExitNegative;
  }

  if (diagnose_cmd->parsed()) {
    homatch::Ssts system = homatch::parse_ssts(read_file(diagnose_file));
    homatch::TermRef candidate = homatch::parse_term(read_file(diagnose_term));
    auto rows = homatch::diagnose(system, candidate, diagnose_fuel);
    bool all_pass = true;
    bool undetermined = false;
    for (const auto& row : rows) {
      const char* mark = row.pass() ? "[pass]" : "[FAIL]";
      if (row.status == homatch::Equiv::undetermined) {
        mark = "[????]";
        undetermined = true;
      }
      all_pass = all_pass && row.pass();
      std::cout << mark << " " << homatch::to_string(row.label) << ": "
                << homatch::print_term(row.left_normal) << "  vs  "
                << homatch::print_term(row.right_normal) << "\n";
    }
    if (undetermined) return kExitBudget;
    return all_pass ? kExitOk : kExitNegative;
  }

  if (solve_cmd->parsed()) {
    homatch::MatchingInstance instance =
        homatch::instance_from_json(read_file(solve_instance));
    homatch::SolveResult result = homatch::solve_bounded(instance, budget);
    if (result.solution) {
      std::cout << homatch::print_term(*result.solution) << "\n";
      return kExitOk;
    }
    std::cout << "none (" << result.candidates << " candidates, "
              << (result.search_complete ? "exhaustive at bound"
                                         : "budget exceeded")
              << ")\n";
    return result.search_complete ? kExitNegative : kExitBudget;
  }

  if (normalize_cmd->parsed()) {
    homatch::TermRef term = homatch::parse_term(read_file(normalize_term));
    homatch::NormalizeResult result = homatch::normalize(term, normalize_fuel);
    std::cout << homatch::print_term(result.term,
                                     indexed ? homatch::TermStyle::indexed
                                             : homatch::TermStyle::named)
              << "\n";
    std::cerr << "# steps: " << result.steps << "\n";
    if (!result.normal) {
      std::cerr << "fuel exhausted\n";
      return kExitBudget;
    }
    return kExitOk;
  }

  if (typecheck_cmd->parsed()) {
    homatch::TermRef term = homatch::parse_term(read_file(typecheck_term));
    if (typecheck_type.empty()) {
      auto inferred = homatch::type_infer({}, term);
      if (!inferred) {
        std::cout << "untypable\n";
        return kExitNegative;
      }
      std::cout << homatch::print_type(*inferred) << "\n";
      return kExitOk;
    }
    homatch::TypeRef want = homatch::parse_type(typecheck_type);
    bool ok = homatch::type_check({}, term, want);
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? kExitOk : kExitNegative;
  }

  if (itype_cmd->parsed()) {
    homatch::Ssts system = homatch::parse_ssts(read_file(itype_file));
    homatch::Derivation steps =
        obtain_derivation(system, itype_n, itype_steps, max_states);
    auto judgments = homatch::witness_judgments(system, itype_n, steps);
    bool all = true;
    for (const auto& j : judgments) {
      bool ok = homatch::itype_derivable(j);
      all = all && ok;
      std::cout << (ok ? "[ok]   " : "[FAIL] ") << j.label << ": "
                << homatch::print_judgment(j) << "\n";
    }
    return all ? kExitOk : kExitNegative;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const homatch::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const homatch::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitBudget;
  } catch (const homatch::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
