// Acceptance suite: one PASS/FAIL line per criterion. With a criterion
// number as argument only that criterion runs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "acg/board_io.hpp"
#include "acg/boards.hpp"
#include "acg/embedding.hpp"
#include "acg/eval.hpp"
#include "acg/harness.hpp"
#include "acg/normalizer.hpp"
#include "acg/text.hpp"

using namespace acg;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kAxiomMinutes = 5.0;
constexpr double kSoundnessMinutes = 10.0;
constexpr double kRefuteShare = 0.80;

struct Outcome {
  bool pass;
  std::string detail;
};

double minutes_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count() / 60.0;
}

std::vector<std::string> names_of(const Term& t) {
  std::vector<std::string> out;
  for (const auto& a : atoms_of(t))
    out.push_back(a.name());
  return out;
}

/// Slot table of a compiled term against an enumerator's atom order.
std::vector<std::size_t> slot_map(const CompiledTerm& c, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : c.atoms())
    idx.push_back(static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin()));
  return idx;
}

RelationPair run_on(const CompiledTerm& c, const std::vector<std::size_t>& map, const BoardView& v) {
  std::vector<const RelationPair*> slots(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    slots[i] = &v.atoms[map[i]];
  return c.run(slots, v.states);
}

Term draw_term(std::uint64_t seed, std::uint64_t i, TermShape shape) {
  auto rng = trial_rng(seed, i);
  return random_term(rng, shape);
}

// 1. Every equational schema survives random instantiation.
Outcome axiom_coherence() {
  FuzzConfig c;
  c.trials = 200;
  c.max_depth = 4;
  c.atom_count = 3;
  c.seed = 7;
  RunReport r = fuzz_axioms(c);
  std::ostringstream os;
  os << r.checked << " instances, " << r.failed << " failures";
  for (const auto& [name, counts] : r.by_property)
    if (counts.second)
      os << "; " << name << " " << counts.second << "/" << counts.first;
  double minutes = r.elapsed.count() / 60000.0;
  os << "; " << r.elapsed.count() << " ms";
  if (r.first_counterexample)
    os << "\n    first: " << r.first_counterexample->inputs.front() << " with "
       << r.first_counterexample->inputs.back();
  return {r.failed == 0 && minutes < kAxiomMinutes, os.str()};
}

// 2. Normal forms are minimal, parallel-free fixpoints.
Outcome elimination() {
  std::size_t bad = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Term t = draw_term(2002, i, TermShape{5, 3, true});
    CanonicalTerm nf = normalize(t);
    Term back = to_term(nf);
    bool ok = is_minimal_canonical(nf) && parallel_only_on_literals(back) && normalize(parse_term(print_term(back))) == nf;
    if (!ok && bad++ == 0)
      first = print_term(t);
  }
  return {bad == 0, std::to_string(1000 - bad) + "/1000 terms" + (bad ? "; first " + first : "")};
}

// 3. Normal forms agree with their terms on every enumerated 2-state board
// and on seeded 3-state boards.
Outcome soundness() {
  auto t0 = Clock::now();
  std::uint64_t checks = 0, bad = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Term t = draw_term(3003, i, TermShape{4, 2, false});
    Term n = to_term(normalize(t));
    auto names = names_of(t);
    for (const auto& a : names_of(n))
      if (std::find(names.begin(), names.end(), a) == names.end())
        names.push_back(a);
    CompiledTerm ct(t), cn(n);
    auto mt = slot_map(ct, names), mn = slot_map(cn, names);
    BoardEnumerator e(2, names);
    BoardView v;
    while (e.next(v)) {
      ++checks;
      if (!(run_on(ct, mt, v) == run_on(cn, mn, v)) && bad++ == 0)
        first = print_term(t);
    }
    std::set<Atom> atoms = atoms_of(t);
    for (std::uint64_t k = 0; k < 100; ++k) {
      GameBoard b = sample_board(3, atoms, {}, i * 100 + k);
      ++checks;
      if (!holds_identity(b, t, n) && bad++ == 0)
        first = print_term(t);
    }
  }
  double minutes = minutes_since(t0);
  std::ostringstream os;
  os << checks << " term/board checks, " << bad << " disagreements; " << static_cast<long>(minutes * 60000) << " ms";
  if (bad)
    os << "; first " << first;
  return {bad == 0 && minutes < kSoundnessMinutes, os.str()};
}

// 4. Isomorphic normal forms are never told apart; non-isomorphic ones
// usually are.
Outcome completeness() {
  std::uint64_t agree_checks = 0, agree_bad = 0;
  for (std::size_t states : {2, 3}) {
    FuzzConfig c;
    c.trials = 300;
    c.board_states = states;
    c.seed = 11;
    RunReport r = fuzz_soundness(c);
    for (const char* p : {"normal-form-agrees", "equivalent-pair-agrees"}) {
      agree_checks += r.by_property[p].first;
      agree_bad += r.by_property[p].second;
    }
  }

  std::size_t pairs = 0, refuted = 0;
  std::vector<std::string> unrefuted;
  for (std::uint64_t i = 0; pairs < 50; ++i) {
    Term a = draw_term(4004, 2 * i, TermShape{3, 2, false});
    Term b = draw_term(4004, 2 * i + 1, TermShape{3, 2, false});
    if (decide_equiv(a, b).equivalent)
      continue;
    ++pairs;
    auto board = find_distinguishing_board(a, b, 3);
    if (board && !holds_identity(*board, a, b))
      ++refuted;
    else
      unrefuted.push_back(print_term(a) + "  vs  " + print_term(b));
  }
  bool pass = agree_bad == 0 && refuted >= kRefuteShare * pairs;
  std::ostringstream os;
  os << "(a) " << agree_checks << " equivalent-pair board checks, " << agree_bad << " disagreements; (b) " << refuted
     << "/" << pairs << " non-isomorphic pairs refuted";
  for (const auto& u : unrefuted)
    os << "\n    none found: " << u;
  return {pass, os.str()};
}

// 5. Evaluation preserves MON and CON on CON boards and DET on DET boards.
Outcome conditions() {
  std::uint64_t checks = 0, bad = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Term t = draw_term(5005, i, TermShape{4, 2, false});
    auto names = names_of(t);
    CompiledTerm c(t);
    auto map = slot_map(c, names);
    BoardView v;
    BoardEnumerator con(2, names, {true, false, false});
    while (con.next(v)) {
      RelationPair r = run_on(c, map, v);
      ++checks;
      if (!(r.first.is_upward_closed() && r.second.is_upward_closed() && satisfies_con(r)) && bad++ == 0)
        first = "MON/CON " + print_term(t);
    }
    BoardEnumerator det(2, names, {true, false, true});
    while (det.next(v)) {
      RelationPair r = run_on(c, map, v);
      ++checks;
      if (!satisfies_det(r) && bad++ == 0)
        first = "DET " + print_term(t);
    }
  }
  return {bad == 0, std::to_string(checks) + " evaluations, " + std::to_string(bad) + " violations" +
                        (bad ? "; first " + first : "")};
}

// 6. Composition is monotone in its second argument.
Outcome g11() {
  std::uint64_t premises = 0, bad = 0;
  const auto pool = atom_pool(3);
  const std::set<Atom> atoms(pool.begin(), pool.end());
  for (std::uint64_t i = 0; i < 200; ++i) {
    TermShape shape{3, 3, false};
    Term x = draw_term(6006, 3 * i, shape), y = draw_term(6006, 3 * i + 1, shape), z = draw_term(6006, 3 * i + 2, shape);
    CompiledTerm cy(y), cz(z), cxy(Term::compose(x, y)), cxz(Term::compose(x, z));
    for (std::uint64_t k = 0; k < 50; ++k) {
      GameBoard b = sample_board(2 + k % 2, atoms, {}, i * 50 + k);
      RelationPair ry = cy.run(b), rz = cz.run(b);
      if (!(ry.first.subset_of(rz.first) && ry.second.subset_of(rz.second)))
        continue;
      ++premises;
      RelationPair rxy = cxy.run(b), rxz = cxz.run(b);
      if (!(rxy.first.subset_of(rxz.first) && rxy.second.subset_of(rxz.second)))
        ++bad;
    }
  }
  return {bad == 0 && premises > 0,
          std::to_string(premises) + " of 10000 triple/board cases met the premise, " + std::to_string(bad) +
              " violations"};
}

// 7. Text and board round trips.
Outcome round_trips() {
  std::size_t term_bad = 0, board_bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Term t = draw_term(7007, i, TermShape{5, 3, true});
    if (!(parse_term(print_term(t)) == t))
      ++term_bad;
  }
  const std::set<Atom> atoms{Atom("a"), Atom("b"), Atom("c")};
  const std::vector<Bundle> bundles{Bundle{{Literal{Atom("a"), false}, Literal{Atom("b"), true}}}};
  for (std::uint64_t i = 0; i < 100; ++i) {
    GameBoard b = sample_board(1 + i % 3, atoms, bundles, 7000 + i);
    GameBoard back = load_board(save_board(b));
    if (!(back.states == b.states && back.atoms == b.atoms && back.bundles == b.bundles))
      ++board_bad;
  }
  return {term_bad == 0 && board_bad == 0, std::to_string(1000 - term_bad) + "/1000 terms, " +
                                               std::to_string(100 - board_bad) + "/100 boards"};
}

// 8. The golden corpus is reproduced byte for byte.
Outcome golden() {
  static const char* required[] = {"1^d",          "(a + b)^d",   "((a ; b)^d)^d", "a || (b ; c)",
                                   "1 || a",       "(a + b) ; c", "a + a",         "a + (a & b)",
                                   "a^d^d",        "b + a",       "a ; 1",         "1 ; a",
                                   "a & (a + b)", "(a ; c) || (b ; d)"};
  std::ifstream in(std::string(ACG_TEST_DATA) + "/golden.txt");
  if (!in)
    return {false, "golden.txt not found"};
  std::size_t pairs = 0, bad = 0;
  std::set<std::string> terms;
  std::string line, first;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto sep = line.find(" => ");
    if (sep == std::string::npos) {
      ++bad;
      continue;
    }
    std::string term = line.substr(0, sep), expected = line.substr(sep + 4);
    terms.insert(term);
    ++pairs;
    std::string got = print_canonical(normalize(parse_term(term)));
    if (got != expected && bad++ == 0)
      first = term + " gave " + got;
  }
  std::size_t missing = 0;
  for (const char* r : required)
    missing += !terms.count(r);
  return {pairs >= 30 && bad == 0 && missing == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs) +
                                                       " pairs reproduced, " + std::to_string(missing) +
                                                       " required examples missing" +
                                                       (bad ? "; first " + first : "")};
}

} // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"axiom coherence", axiom_coherence},   {"elimination", elimination},
      {"sequential soundness", soundness},    {"completeness consistency", completeness},
      {"condition preservation", conditions}, {"G11 monotonicity", g11},
      {"round trips", round_trips},           {"golden corpus", golden},
  };
  std::size_t only = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 0;
  if (argc > 1 && (only < 1 || only > criteria.size())) {
    std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
    return 2;
  }
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1)
      continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
