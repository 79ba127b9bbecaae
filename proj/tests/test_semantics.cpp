#include <doctest.h>

#include "acg/board_io.hpp"
#include "acg/boards.hpp"
#include "acg/eval.hpp"
#include "acg/harness.hpp"
#include "acg/normalizer.hpp"
#include "acg/text.hpp"
#include "oracle.hpp"

using namespace acg;

namespace {

constexpr StateSet S0 = 1, S1 = 2, S01 = 3;

Family fam(std::initializer_list<StateSet> sets) {
  Family f = 0;
  for (StateSet x : sets)
    f |= Family{1} << x;
  return f;
}

// S = {s0, s1}; player 1 of atom a is generated by (s0, {s1}).
GameBoard board_b0() {
  GameBoard b = GameBoard::with_states({"s0", "s1"});
  b.atoms["a"] = {OutcomeRelation::monotone_close(2, {{0, S1}}), OutcomeRelation(2)};
  b.atoms["b"] = b.empty_pair();
  return b;
}

std::vector<GameBoard> random_boards(std::size_t states, const std::set<Atom>& atoms, std::uint64_t seed, int n) {
  std::vector<GameBoard> out;
  for (int i = 0; i < n; ++i)
    out.push_back(sample_board(states, atoms, {}, seed * 1000 + i));
  return out;
}

} // namespace

TEST_CASE("monotone closure") {
  auto r = OutcomeRelation::monotone_close(2, {{0, S1}});
  CHECK(r.at(0) == fam({S1, S01}));
  CHECK(r.at(1) == 0);
  CHECK(OutcomeRelation::monotone_close(2, {}).empty());
  CHECK(OutcomeRelation::monotone_close(2, {{0, 0}}).at(0) == fam({0, S0, S1, S01}));
  CHECK_THROWS_AS(OutcomeRelation::monotone_close(2, {{2, S0}}), Error);
}

TEST_CASE("monotone closure agrees with the explicit superset oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<std::pair<std::size_t, StateSet>> gens;
    std::vector<std::pair<int, oracle::Set>> ogens;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      std::size_t s = rng() % n;
      StateSet x = static_cast<StateSet>(rng() % (1U << n));
      gens.emplace_back(s, x);
      oracle::Set ox;
      for (int i = 0; i < n; ++i)
        if (x & (1U << i))
          ox.insert(i);
      ogens.emplace_back(static_cast<int>(s), ox);
    }
    auto r = OutcomeRelation::monotone_close(n, gens);
    CHECK(oracle::expand(r, n) == oracle::close(n, ogens));
    CHECK(r.is_upward_closed());
    CHECK(OutcomeRelation::monotone_close(n, r.generators()) == r);
  }
}

TEST_CASE("upward-closed family counts match direct enumeration") {
  for (int n = 0; n <= 3; ++n)
    CHECK(family::all_upward_closed(n).size() == oracle::upward_families(n).size());
  CHECK(family::all_upward_closed(1).size() == 3);
  CHECK(family::all_upward_closed(2).size() == 6);
  CHECK(family::all_upward_closed(3).size() == 20);
}

TEST_CASE("enumeration counts per state match the consistency oracle") {
  for (int n = 1; n <= 3; ++n) {
    auto fams = oracle::upward_families(n);
    std::size_t con = 0, det = 0, fin = 0;
    for (const auto& f1 : fams)
      for (const auto& f2 : fams) {
        // Single-state view: complements are taken in the n-state universe.
        bool ok = true, d = true;
        for (const auto& x : oracle::subsets(n)) {
          bool a = f1.count(x), b = f2.count(oracle::complement(x, n));
          ok = ok && !(a && b);
          d = d && (a != b);
        }
        oracle::Set all = oracle::complement({}, n);
        con += ok;
        det += ok && d;
        fin += ok && f1.count(all) && f2.count(all);
      }
    std::vector<std::string> one{"a"};
    CHECK(BoardEnumerator(n, one).state_choices().size() == con);
    CHECK(BoardEnumerator(n, one, {true, false, true}).state_choices().size() == det);
    CHECK(BoardEnumerator(n, one, {true, true, false}).state_choices().size() == fin);
  }
  CHECK(BoardEnumerator(1, {"a"}).count() == 6);
  CHECK(BoardEnumerator(2, {"a"}).count() == 400);
  CHECK(BoardEnumerator(2, {"a", "b"}).count() == 160000);
  CHECK(BoardEnumerator(1, {"a"}, {false, false, false}).count() == 9);
}

TEST_CASE("enumerated boards are distinct and meet the requirements") {
  auto boards = enumerate_boards(2, {Atom("a")});
  CHECK(boards.size() == 400);
  std::set<std::string> seen;
  for (const auto& b : boards) {
    BoardReport rep = check_board(b);
    CHECK(rep.mon);
    CHECK(rep.con);
    seen.insert(save_board(b));
  }
  CHECK(seen.size() == boards.size());
  for (const auto& b : enumerate_boards(1, {Atom("a")}, {true, false, true}))
    CHECK(satisfies_det(b.atoms.at("a")));
  CHECK(enumerate_boards(0, {Atom("a")}).size() == 1);
  CHECK_THROWS_AS(enumerate_boards(4, {Atom("a")}), LimitError);
  CHECK_THROWS_AS(enumerate_boards(1, {Atom("a"), Atom("b"), Atom("c")}), LimitError);
}

TEST_CASE("check_board reports the conditions") {
  GameBoard empty = GameBoard::with_states({"s0"});
  empty.atoms["a"] = empty.empty_pair();
  BoardReport r = check_board(empty);
  CHECK(r.mon);
  CHECK(r.con);
  CHECK_FALSE(r.fin);
  CHECK_FALSE(r.det);

  // Both players generated by (s0, {s0}) on S = {s0}: the complement of {s0}
  // is the empty set, which player 2 does not force, so consistency holds.
  GameBoard both = GameBoard::with_states({"s0"});
  auto g = OutcomeRelation::monotone_close(1, {{0, S0}});
  both.atoms["a"] = {g, g};
  oracle::Pair op = oracle::expand(both.atoms["a"], 1);
  r = check_board(both);
  CHECK(r.con == oracle::con(op, 1));
  CHECK(r.con);
  CHECK(r.fin);

  GameBoard bad = GameBoard::with_states({"s0", "s1"});
  bad.atoms["a"] = {OutcomeRelation::monotone_close(2, {{0, S1}}), OutcomeRelation::monotone_close(2, {{0, S0}})};
  r = check_board(bad);
  CHECK_FALSE(r.con);
  bool witnessed = false;
  for (const auto& v : r.violations)
    if (v.condition == "CON" && v.subject == "a" && v.state == 0 && v.set == S1)
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("a board built through determinacy is determined") {
  GameBoard b = GameBoard::with_states({"s0", "s1"});
  auto r1 = OutcomeRelation::monotone_close(2, {{0, S1}, {1, S0}, {1, S1}});
  OutcomeRelation r2(2);
  for (std::size_t s = 0; s < 2; ++s) {
    Family f = 0;
    for (StateSet x = 0; x < 4; ++x)
      if (!r1.holds(s, x))
        f |= Family{1} << (3 & ~x);
    r2.set(s, f);
  }
  b.atoms["a"] = {r1, r2};
  BoardReport rep = check_board(b);
  CHECK(rep.det);
  CHECK(rep.con);
  CHECK(oracle::det(oracle::expand(b.atoms["a"], 2), 2));
}

TEST_CASE("evaluation examples") {
  GameBoard b0 = board_b0();
  CHECK(eval_outcome(b0, Term::idle(), Player::One) == OutcomeRelation::identity(2));
  CHECK(eval_outcome(b0, parse_term("a ; a"), Player::One).empty());
  CHECK(eval_outcome(b0, parse_term("a + 1"), Player::One).at(0) == fam({S0, S1, S01}));
  CHECK(holds_identity(b0, parse_term("a ; 1"), parse_term("a")));
  CHECK_FALSE(holds_identity(b0, parse_term("a"), parse_term("b")));
  CHECK(holds_inclusion(b0, parse_term("a & b"), parse_term("a"), Player::One));
  CHECK_THROWS_AS(evaluate(b0, parse_term("c")), UnknownAtomError);
}

TEST_CASE("evaluation agrees with the brute-force oracle") {
  const std::set<Atom> atoms{Atom("a"), Atom("b")};
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = trial_rng(13, i);
    Term t = random_term(rng, TermShape{4, 2, false});
    for (const auto& b : random_boards(1 + i % 3, atoms, i, 4)) {
      CAPTURE(print_term(t));
      CAPTURE(save_board(b));
      CHECK(oracle::expand(evaluate(b, t), static_cast<int>(b.state_count())) == oracle::eval(t, b));
    }
  }
}

TEST_CASE("compiled product mode agrees with the oracle product") {
  const std::set<Atom> atoms{Atom("a"), Atom("b")};
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = trial_rng(14, i);
    Term t = random_term(rng, TermShape{4, 2, true});
    for (const auto& b : random_boards(2, atoms, i, 3)) {
      CAPTURE(print_term(t));
      CompiledTerm c(t, CompiledTerm::ParallelMode::Product);
      CHECK(oracle::expand(c.run(b), 2) == oracle::eval(t, b));
    }
  }
  CHECK_THROWS_AS(CompiledTerm(parse_term("a || b")), EvaluationError);
}

TEST_CASE("default bundle relation is the intersection product") {
  GameBoard b = GameBoard::with_states({"s0", "s1"});
  b.atoms["a"] = {OutcomeRelation::monotone_close(2, {{0, S1}}), OutcomeRelation(2)};
  b.atoms["b"] = {OutcomeRelation::monotone_close(2, {{0, S01}}), OutcomeRelation(2)};
  Literal la{Atom("a"), false}, lb{Atom("b"), false};
  OutcomeRelation ab = default_bundle_relation(b, Bundle{{la, lb}}, Player::One);
  CHECK((ab.at(0) & fam({S1, S01})) == fam({S1, S01}));
  CHECK(oracle::expand(ab, 2) == oracle::product(oracle::expand(b.atoms["a"].first, 2),
                                                 oracle::expand(b.atoms["b"].first, 2), 2));
  CHECK(default_bundle_relation(b, Bundle{{la}}, Player::One) == b.atoms["a"].first);
  GameBoard b0 = board_b0();
  CHECK(default_bundle_relation(b0, Bundle{{la, la}}, Player::One) == b0.atoms["a"].first);
}

TEST_CASE("bundles resolve explicit data first") {
  GameBoard b = board_b0();
  Literal la{Atom("a"), false}, lb{Atom("b"), false};
  RelationPair explicit_pair{OutcomeRelation::monotone_close(2, {{1, S0}}), OutcomeRelation(2)};
  b.bundles[Bundle{{la, lb}}] = explicit_pair;
  CHECK(resolve_bundle(b, Bundle{{la, lb}}) == explicit_pair);
  Literal da{Atom("a"), true}, db{Atom("b"), true};
  CHECK(resolve_bundle(b, Bundle{{da, db}}) == explicit_pair.swapped());
  CHECK(resolve_bundle(b, Bundle{{lb, la}}) == default_bundle_pair(b, Bundle{{lb, la}}));
  CHECK(evaluate(b, parse_term("a || b")) == explicit_pair);
}

TEST_CASE("inconsistent bundle products are unresolvable") {
  // a: player 1 forces {s0}, player 2 forces {s0}; c: both players force
  // {s1}. Each atom is consistent. In the bundle a || c^d player 1 gets
  // {s0} n {s1} = {} and player 2 also gets {}, so player 1 forces {} while
  // player 2 forces its complement S.
  GameBoard b = GameBoard::with_states({"s0", "s1"});
  b.atoms["a"] = {OutcomeRelation::monotone_close(2, {{0, S0}}), OutcomeRelation::monotone_close(2, {{0, S0}})};
  b.atoms["c"] = {OutcomeRelation::monotone_close(2, {{0, S1}}), OutcomeRelation::monotone_close(2, {{0, S1}})};
  REQUIRE(check_board(b).con);
  Bundle bundle{{Literal{Atom("a"), false}, Literal{Atom("c"), true}}};
  CHECK_THROWS_AS(default_bundle_pair(b, bundle), UnresolvableBundleError);
  CHECK_THROWS_AS(evaluate(b, parse_term("a || c^d")), UnresolvableBundleError);
  b.bundles[bundle] = b.empty_pair();
  CHECK(evaluate(b, parse_term("a || c^d")) == b.empty_pair());
}

TEST_CASE("sampled boards are deterministic and consistent") {
  const std::set<Atom> atoms{Atom("a"), Atom("b")};
  CHECK(sample_board(2, atoms, {}, 42) == sample_board(2, atoms, {}, 42));
  std::set<std::string> distinct;
  for (std::uint64_t s = 0; s < 100; ++s) {
    GameBoard b = sample_board(2, atoms, {Bundle{{Literal{Atom("a"), false}, Literal{Atom("b"), false}}}}, s);
    BoardReport rep = check_board(b);
    CHECK(rep.mon);
    CHECK(rep.con);
    CHECK(b.bundles.size() == 1);
    distinct.insert(save_board(b));
  }
  CHECK(distinct.size() >= 2);
  CHECK_THROWS_AS(sample_board(0, atoms, {}, 1), LimitError);
}

TEST_CASE("distinguishing boards") {
  auto ab = find_distinguishing_board(parse_term("a"), parse_term("b"), 3);
  REQUIRE(ab);
  CHECK(ab->state_count() == 1);
  CHECK_FALSE(ab->atoms.at("a").first == ab->atoms.at("b").first);
  CHECK_FALSE(find_distinguishing_board(parse_term("a ; 1"), parse_term("a"), 3));
  auto uni = find_distinguishing_board(parse_term("a + b"), parse_term("a & b"), 3);
  REQUIRE(uni);
  CHECK(uni->state_count() == 1);
  CHECK_FALSE(holds_identity(*uni, parse_term("a + b"), parse_term("a & b")));
  auto three = find_distinguishing_board(parse_term("a ; (b + c)"), parse_term("a ; b + a ; c"), 3);
  REQUIRE(three);
  CHECK(check_board(*three).con);
  CHECK_FALSE(holds_identity(*three, parse_term("a ; (b + c)"), parse_term("a ; b + a ; c")));
  CHECK_THROWS_AS(find_distinguishing_board(parse_term("a || b"), parse_term("a"), 2), EvaluationError);
  CHECK_THROWS_AS(find_distinguishing_board(parse_term("a"), parse_term("b"), 4), LimitError);
}

TEST_CASE("evaluation preserves monotonicity and consistency") {
  const std::set<Atom> atoms{Atom("a"), Atom("b")};
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = trial_rng(15, i);
    Term t = random_term(rng, TermShape{5, 2, false});
    for (const auto& b : random_boards(3, atoms, i, 3)) {
      RelationPair r = evaluate(b, t);
      CHECK(r.first.is_upward_closed());
      CHECK(r.second.is_upward_closed());
      CHECK(satisfies_con(r));
    }
  }
}
