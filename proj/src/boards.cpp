#include "acg/boards.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "acg/eval.hpp"

namespace acg {

BoardEnumerator::BoardEnumerator(std::size_t states, std::vector<std::string> atoms, BoardRequirements req)
    : states_(states), atoms_(std::move(atoms)) {
  if (states > kMaxEnumStates)
    throw LimitError("board enumeration supports at most " + std::to_string(kMaxEnumStates) + " states");
  const auto families = family::all_upward_closed(states);
  const Family all = family::universe(states);
  const StateSet whole = (StateSet{1} << states) - 1;
  for (Family f2 : families)
    for (Family f1 : families) {
      Family comp2 = family::complement_sets(f2, states);
      if (req.con && (f1 & comp2))
        continue;
      if (req.fin && !(family::contains(f1, whole) && family::contains(f2, whole)))
        continue;
      if (req.det && comp2 != (all & ~f1))
        continue;
      choices_.emplace_back(f1, f2);
    }
  count_ = 1;
  for (std::size_t i = 0; i < states * atoms_.size(); ++i) {
    if (count_ > std::numeric_limits<std::uint64_t>::max() / choices_.size()) {
      count_ = std::numeric_limits<std::uint64_t>::max();
      exact_ = false;
      break;
    }
    count_ *= choices_.size();
  }
}

void BoardEnumerator::decode(std::uint64_t index, BoardView& out) const {
  out.states = states_;
  out.atoms.assign(atoms_.size(), RelationPair{OutcomeRelation(states_), OutcomeRelation(states_)});
  const std::uint64_t radix = choices_.size();
  for (auto& pair : out.atoms)
    for (std::size_t s = 0; s < states_; ++s) {
      const auto& [f1, f2] = choices_[index % radix];
      index /= radix;
      pair.first.set(s, f1);
      pair.second.set(s, f2);
    }
}

void BoardEnumerator::random(std::mt19937_64& rng, BoardView& out) const {
  out.states = states_;
  out.atoms.assign(atoms_.size(), RelationPair{OutcomeRelation(states_), OutcomeRelation(states_)});
  std::uniform_int_distribution<std::size_t> pick(0, choices_.size() - 1);
  for (auto& pair : out.atoms)
    for (std::size_t s = 0; s < states_; ++s) {
      const auto& [f1, f2] = choices_[pick(rng)];
      pair.first.set(s, f1);
      pair.second.set(s, f2);
    }
}

GameBoard BoardEnumerator::to_board(const BoardView& view) const {
  GameBoard b = GameBoard::with_states(default_state_names(states_));
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    b.atoms[atoms_[i]] = view.atoms[i];
  BoardReport rep = check_board(b);
  b.fin = rep.fin;
  b.det = rep.det;
  return b;
}

GameBoard BoardEnumerator::board(std::uint64_t index) const {
  BoardView v;
  decode(index, v);
  return to_board(v);
}

bool BoardEnumerator::next(BoardView& out) {
  if (cursor_ >= count_)
    return false;
  decode(cursor_++, out);
  return true;
}

std::vector<GameBoard> enumerate_boards(std::size_t states, const std::set<Atom>& atoms, BoardRequirements req) {
  if (atoms.size() > kMaxEnumAtoms)
    throw LimitError("board enumeration supports at most " + std::to_string(kMaxEnumAtoms) + " atoms");
  std::vector<std::string> names;
  for (const auto& a : atoms)
    names.push_back(a.name());
  BoardEnumerator e(states, names, req);
  if (!e.count_exact() || e.count() > 10'000'000)
    throw LimitError("enumerate_boards: too many boards to materialize");
  std::vector<GameBoard> out;
  BoardView v;
  while (e.next(v))
    out.push_back(e.to_board(v));
  return out;
}

namespace {

RelationPair random_pair(std::size_t n, std::mt19937_64& rng) {
  RelationPair r{OutcomeRelation(n), OutcomeRelation(n)};
  const StateSet subsets = StateSet{1} << n;
  for (OutcomeRelation* rel : {&r.first, &r.second})
    for (std::size_t s = 0; s < n; ++s) {
      Family f = 0;
      std::uint64_t k = rng() % 3;
      for (std::uint64_t g = 0; g < k; ++g)
        f |= Family{1} << (rng() % subsets);
      rel->set(s, family::upward_closure(f, n));
    }
  for (std::size_t s = 0; s < n; ++s)
    r.second.set(s, r.second.at(s) & ~family::complement_sets(r.first.at(s), n));
  return r;
}

} // namespace

GameBoard sample_board(std::size_t states, const std::set<Atom>& atoms, const std::vector<Bundle>& bundles,
                       std::uint64_t seed) {
  if (states == 0)
    throw LimitError("sample_board: at least one state is required");
  GameBoard b = GameBoard::with_states(default_state_names(states));
  std::mt19937_64 rng(seed);
  for (const auto& a : atoms)
    b.atoms[a.name()] = random_pair(states, rng);
  for (const auto& bundle : bundles)
    if (bundle.literals.size() >= 2)
      b.bundles[bundle] = random_pair(states, rng);
  BoardReport rep = check_board(b);
  b.fin = rep.fin;
  b.det = rep.det;
  return b;
}

std::optional<GameBoard> find_distinguishing_board(const Term& a, const Term& b, std::size_t max_states,
                                                   const SearchBudget& budget) {
  if (max_states > kMaxEnumStates)
    throw LimitError("find_distinguishing_board: at most " + std::to_string(kMaxEnumStates) + " states");
  if (contains_parallel(a) || contains_parallel(b))
    throw EvaluationError("find_distinguishing_board: terms must be free of ||");
  std::set<Atom> atoms = atoms_of(a);
  for (const auto& x : atoms_of(b))
    atoms.insert(x);
  std::vector<std::string> names;
  for (const auto& x : atoms)
    names.push_back(x.name());

  CompiledTerm ca(a), cb(b);
  auto slots_for = [&](const CompiledTerm& c) {
    std::vector<std::size_t> idx;
    for (const auto& n : c.atoms())
      idx.push_back(static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin()));
    return idx;
  };
  const auto ia = slots_for(ca), ib = slots_for(cb);
  std::vector<const RelationPair*> pa(ia.size()), pb(ib.size());

  for (std::size_t n = 1; n <= max_states; ++n) {
    BoardEnumerator e(n, names, BoardRequirements{});
    BoardView v;
    auto differs = [&]() {
      for (std::size_t i = 0; i < ia.size(); ++i)
        pa[i] = &v.atoms[ia[i]];
      for (std::size_t i = 0; i < ib.size(); ++i)
        pb[i] = &v.atoms[ib[i]];
      return !(ca.run(pa, n) == cb.run(pb, n));
    };
    if (e.count_exact() && e.count() <= budget.exhaustive_limit) {
      for (std::uint64_t i = 0; i < e.count(); ++i) {
        e.decode(i, v);
        if (differs())
          return e.to_board(v);
      }
    } else {
      std::mt19937_64 rng(budget.seed ^ (n * 0x9e3779b97f4a7c15ULL));
      for (std::uint64_t k = 0; k < budget.samples; ++k) {
        e.random(rng, v);
        if (differs())
          return e.to_board(v);
      }
    }
  }
  return std::nullopt;
}

} // namespace acg
