#include "acg/board.hpp"

#include <set>
#include <sstream>

namespace acg {

std::optional<std::size_t> GameBoard::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name)
      return i;
  return std::nullopt;
}

GameBoard GameBoard::with_states(std::vector<std::string> names) {
  if (names.size() > kMaxStates)
    throw Error("board: at most " + std::to_string(kMaxStates) + " states are supported");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw Error("board: duplicate state name '" + n + "'");
  GameBoard b;
  b.states = std::move(names);
  return b;
}

RelationPair GameBoard::empty_pair() const {
  return {OutcomeRelation(state_count()), OutcomeRelation(state_count())};
}

std::vector<std::string> default_state_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back("s" + std::to_string(i));
  return out;
}

namespace {

void check_pair(const std::string& subject, const RelationPair& r, std::size_t n, BoardReport& rep) {
  const StateSet all = (StateSet{1} << n) - 1;
  for (Player p : {Player::One, Player::Two}) {
    const auto& rel = r.of(p);
    for (std::size_t s = 0; s < n; ++s) {
      Family f = rel.at(s);
      Family closed = family::upward_closure(f, n);
      if (closed != f) {
        rep.mon = false;
        for (StateSet x = 0; x <= all; ++x)
          if (family::contains(closed & ~f, x))
            rep.violations.push_back({subject, p, s, x, "MON"});
      }
      if (!rel.holds(s, all)) {
        rep.fin = false;
        rep.violations.push_back({subject, p, s, all, "FIN"});
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s)
    for (StateSet x = 0; x <= all; ++x) {
      bool forces1 = r.first.holds(s, x);
      bool forces2 = r.second.holds(s, all & ~x);
      if (forces1 && forces2) {
        rep.con = false;
        rep.violations.push_back({subject, Player::One, s, x, "CON"});
      }
      if (forces1 == forces2) {
        rep.det = false;
        rep.violations.push_back({subject, Player::One, s, x, "DET"});
      }
    }
}

} // namespace

BoardReport check_board(const GameBoard& board) {
  BoardReport rep;
  const std::size_t n = board.state_count();
  for (const auto& [name, pair] : board.atoms)
    check_pair(name, pair, n, rep);
  for (const auto& [bundle, pair] : board.bundles)
    check_pair(bundle_key(bundle), pair, n, rep);
  return rep;
}

std::string describe_set(const GameBoard& board, StateSet x) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < board.state_count(); ++i)
    if (x & (StateSet{1} << i)) {
      if (!first)
        out += ",";
      out += board.states[i];
      first = false;
    }
  return out + "}";
}

std::string describe(const GameBoard& board, const Violation& v) {
  std::ostringstream os;
  os << v.condition << " " << v.subject << " player " << static_cast<int>(v.player) << " state "
     << board.states[v.state] << " set " << describe_set(board, v.set);
  return os.str();
}

} // namespace acg
