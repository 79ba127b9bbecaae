// Command-line front end for the game algebra kernel.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acg/board_io.hpp"
#include "acg/boards.hpp"
#include "acg/embedding.hpp"
#include "acg/eval.hpp"
#include "acg/harness.hpp"
#include "acg/normalizer.hpp"
#include "acg/text.hpp"

namespace {

using namespace acg;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string generators_json(const GameBoard& board, const OutcomeRelation& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, x] : r.generators()) {
    nlohmann::json set = nlohmann::json::array();
    for (std::size_t i = 0; i < board.state_count(); ++i)
      if (x & (StateSet{1} << i))
        set.push_back(board.states[i]);
    out.push_back({board.states[s], set});
  }
  return out.dump();
}

int report_verdict(bool holds, const char* yes, const char* no) {
  std::cout << (holds ? yes : no) << "\n";
  return holds ? kHolds : kFails;
}

void print_report(const RunReport& r, bool json) {
  std::cout << r.summary();
  if (json)
    std::cout << r.json_line() << "\n";
}

void check_config(const FuzzConfig& c) {
  if (c.atom_count < 1 || c.atom_count > 3)
    throw UsageError("--atoms must be between 1 and 3");
  if (c.board_states < 1 || c.board_states > kMaxEnumStates)
    throw UsageError("--states must be between 1 and " + std::to_string(kMaxEnumStates));
  if (c.max_depth < 1)
    throw UsageError("--depth must be at least 1");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, board semantics and axiom fuzzing for concurrent game terms"};
  app.require_subcommand(1);

  std::string t1, t2, board_path, check;
  int player = 1;
  std::size_t max_states = 3;
  bool json = false;
  FuzzConfig fuzz;

  auto* normalize_cmd = app.add_subcommand("normalize", "print the minimal canonical form");
  normalize_cmd->add_option("term", t1)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence by isomorphism of normal forms");
  equiv_cmd->add_option("term1", t1)->required();
  equiv_cmd->add_option("term2", t2)->required();

  auto* leq_cmd = app.add_subcommand("leq", "lattice order: term1 + term2 equals term2");
  leq_cmd->add_option("term1", t1)->required();
  leq_cmd->add_option("term2", t2)->required();

  auto* embeds_cmd = app.add_subcommand("embeds", "embedding of the normal form of term1 into that of term2");
  embeds_cmd->add_option("term1", t1)->required();
  embeds_cmd->add_option("term2", t2)->required();

  auto* eval_cmd = app.add_subcommand("eval", "outcome relation of a term on a board, as generators");
  eval_cmd->add_option("--board", board_path)->required();
  eval_cmd->add_option("--term", t1)->required();
  eval_cmd->add_option("--player", player)->check(CLI::IsMember({1, 2}))->default_val(1);

  auto* valid_cmd = app.add_subcommand("valid", "check an identity T1 = T2 on a board");
  valid_cmd->add_option("--board", board_path)->required();
  valid_cmd->add_option("--check", check)->required();

  auto* check_board_cmd = app.add_subcommand("check-board", "report MON, CON, FIN and DET");
  check_board_cmd->add_option("file", board_path)->required();

  auto* find_cmd = app.add_subcommand("find-board", "search for a board telling two terms apart");
  std::vector<std::string> pair;
  find_cmd->add_option("--distinguish", pair)->required()->expected(2);
  find_cmd->add_option("--max-states", max_states)->default_val(3);

  auto* axioms_cmd = app.add_subcommand("check-axioms", "normalize random instances of every equational axiom");
  axioms_cmd->add_option("--trials", fuzz.trials);
  axioms_cmd->add_option("--depth", fuzz.max_depth);
  axioms_cmd->add_option("--atoms", fuzz.atom_count);
  axioms_cmd->add_option("--seed", fuzz.seed);
  axioms_cmd->add_flag("--json", json, "also print one JSON line");

  auto* sound_cmd = app.add_subcommand("fuzz-soundness", "compare normal forms with their terms on random boards");
  sound_cmd->add_option("--trials", fuzz.trials);
  sound_cmd->add_option("--depth", fuzz.max_depth);
  sound_cmd->add_option("--atoms", fuzz.atom_count);
  sound_cmd->add_option("--states", fuzz.board_states);
  sound_cmd->add_option("--boards", fuzz.boards_per_trial);
  sound_cmd->add_option("--seed", fuzz.seed);
  sound_cmd->add_flag("--json", json, "also print one JSON line");

  auto* cg_cmd = app.add_subcommand("cg-semantics-report", "how often each || axiom holds under the bundle product");
  cg_cmd->add_option("--trials", fuzz.trials);
  cg_cmd->add_option("--states", fuzz.board_states);
  cg_cmd->add_option("--boards", fuzz.boards_per_trial);
  cg_cmd->add_option("--seed", fuzz.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*normalize_cmd) {
      std::cout << print_canonical(normalize(parse_term(t1))) << "\n";
      return kHolds;
    }
    if (*equiv_cmd) {
      auto v = decide_equiv(parse_term(t1), parse_term(t2));
      std::cout << "nf1: " << print_canonical(v.nf1) << "\n";
      std::cout << "nf2: " << print_canonical(v.nf2) << "\n";
      return report_verdict(v.equivalent, "equivalent", "not equivalent");
    }
    if (*leq_cmd)
      return report_verdict(lattice_leq(parse_term(t1), parse_term(t2)), "lattice order holds",
                            "lattice order fails");
    if (*embeds_cmd)
      return report_verdict(embeds(normalize(parse_term(t1)), normalize(parse_term(t2))), "embeds",
                            "does not embed");
    if (*eval_cmd) {
      GameBoard b = load_board(read_file(board_path));
      Term t = parse_term(t1);
      std::cout << generators_json(b, eval_outcome(b, t, player == 1 ? Player::One : Player::Two)) << "\n";
      return kHolds;
    }
    if (*valid_cmd) {
      auto eq = check.find('=');
      if (eq == std::string::npos || check.find('=', eq + 1) != std::string::npos)
        throw UsageError("--check expects exactly one '='");
      Term lhs = parse_term(std::string_view(check).substr(0, eq));
      Term rhs = parse_term(std::string_view(check).substr(eq + 1));
      GameBoard b = load_board(read_file(board_path));
      RelationPair l = evaluate(b, lhs), r = evaluate(b, rhs);
      for (Player p : {Player::One, Player::Two})
        if (!(l.of(p) == r.of(p)))
          std::cout << "player " << (p == Player::One ? 1 : 2) << ": " << generators_json(b, l.of(p)) << " vs "
                    << generators_json(b, r.of(p)) << "\n";
      return report_verdict(l == r, "valid on board", "not valid on board");
    }
    if (*check_board_cmd) {
      GameBoard b = read_board(read_file(board_path));
      BoardReport rep = check_board(b);
      std::cout << std::boolalpha << "mon: " << rep.mon << "\ncon: " << rep.con << "\nfin: " << rep.fin
                << "\ndet: " << rep.det << "\n";
      for (const auto& v : rep.violations)
        std::cout << "  " << describe(b, v) << "\n";
      return rep.mon && rep.con ? kHolds : kFails;
    }
    if (*find_cmd) {
      if (max_states < 1 || max_states > kMaxEnumStates)
        throw UsageError("--max-states must be between 1 and " + std::to_string(kMaxEnumStates));
      Term a = parse_term(pair[0]), b = parse_term(pair[1]);
      if (contains_parallel(a) || contains_parallel(b))
        throw UsageError("find-board takes terms without ||");
      auto found = find_distinguishing_board(a, b, max_states);
      if (!found) {
        std::cout << "none\n";
        return kHolds;
      }
      std::cout << save_board(*found) << "\n";
      return kFails;
    }
    if (*axioms_cmd) {
      check_config(fuzz);
      RunReport r = fuzz_axioms(fuzz);
      print_report(r, json);
      return r.failed == 0 ? kHolds : kFails;
    }
    if (*sound_cmd) {
      check_config(fuzz);
      RunReport r = fuzz_soundness(fuzz);
      print_report(r, json);
      return r.failed == 0 ? kHolds : kFails;
    }
    if (*cg_cmd) {
      check_config(fuzz);
      std::cout << "axiom  held/checked  (|| read as the intersection product)\n";
      for (const auto& row : cg_semantics_report(fuzz))
        std::cout << row.name << std::string(row.name.size() < 6 ? 6 - row.name.size() : 1, ' ') << " " << row.held
                  << "/" << row.checked << "\n";
      return kHolds;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
