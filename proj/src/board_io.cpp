#include "acg/board_io.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace acg {

using nlohmann::json;
using nlohmann::ordered_json;

ConsistencyError::ConsistencyError(std::string subject, std::string state, std::string set)
    : Error("CON violation: " + subject + " at state " + state + " with set " + set), subject_(std::move(subject)),
      state_(std::move(state)), set_(std::move(set)) {}

namespace {

OutcomeRelation read_relation(const GameBoard& board, const json& gens, const std::string& where) {
  if (!gens.is_array())
    throw BoardFormatError(where + ": expected an array of generators");
  std::vector<std::pair<std::size_t, StateSet>> out;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != 2 || !g[0].is_string() || !g[1].is_array())
      throw BoardFormatError(where + ": generator must be [\"state\", [\"state\", ...]]");
    auto s = board.state_index(g[0].get<std::string>());
    if (!s)
      throw BoardFormatError(where + ": unknown state '" + g[0].get<std::string>() + "'");
    StateSet x = 0;
    for (const auto& t : g[1]) {
      if (!t.is_string())
        throw BoardFormatError(where + ": state names must be strings");
      auto ti = board.state_index(t.get<std::string>());
      if (!ti)
        throw BoardFormatError(where + ": unknown state '" + t.get<std::string>() + "'");
      x |= StateSet{1} << *ti;
    }
    out.emplace_back(*s, x);
  }
  return OutcomeRelation::monotone_close(board.state_count(), out);
}

RelationPair read_pair(const GameBoard& board, const json& obj, const std::string& where) {
  if (!obj.is_object())
    throw BoardFormatError(where + ": expected an object with rho1 and rho2");
  for (const auto& [k, v] : obj.items())
    if (k != "rho1" && k != "rho2")
      throw BoardFormatError(where + ": unexpected key '" + k + "'");
  RelationPair r = board.empty_pair();
  if (obj.contains("rho1"))
    r.first = read_relation(board, obj["rho1"], where + ".rho1");
  if (obj.contains("rho2"))
    r.second = read_relation(board, obj["rho2"], where + ".rho2");
  return r;
}

ordered_json write_relation(const GameBoard& board, const std::vector<std::size_t>& order,
                            const OutcomeRelation& rel) {
  // Re-index masks so that bit i refers to the i-th state in sorted order.
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[order[i]] = i;
  std::vector<std::tuple<std::size_t, StateSet, ordered_json>> gens;
  for (auto [s, x] : rel.generators()) {
    StateSet sorted_mask = 0;
    ordered_json names = ordered_json::array();
    for (std::size_t i : order)
      if (x & (StateSet{1} << i)) {
        sorted_mask |= StateSet{1} << rank[i];
        names.push_back(board.states[i]);
      }
    gens.emplace_back(rank[s], sorted_mask, ordered_json::array({board.states[s], names}));
  }
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  ordered_json out = ordered_json::array();
  for (auto& g : gens)
    out.push_back(std::move(std::get<2>(g)));
  return out;
}

ordered_json write_pair(const GameBoard& board, const std::vector<std::size_t>& order, const RelationPair& r) {
  ordered_json out = ordered_json::object();
  out["rho1"] = write_relation(board, order, r.first);
  out["rho2"] = write_relation(board, order, r.second);
  return out;
}

// Reorders the board's states lexicographically.
GameBoard sorted_states(const GameBoard& board) {
  const std::size_t n = board.state_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return board.states[a] < board.states[b]; });
  if (std::is_sorted(order.begin(), order.end()))
    return board;
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[order[i]] = i;
  auto remap_rel = [&](const OutcomeRelation& r) {
    std::vector<std::pair<std::size_t, StateSet>> gens;
    for (auto [s, x] : r.generators()) {
      StateSet y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (x & (StateSet{1} << i))
          y |= StateSet{1} << rank[i];
      gens.emplace_back(rank[s], y);
    }
    return OutcomeRelation::monotone_close(n, gens);
  };
  auto remap = [&](const RelationPair& p) { return RelationPair{remap_rel(p.first), remap_rel(p.second)}; };
  GameBoard out = board;
  for (std::size_t i = 0; i < n; ++i)
    out.states[i] = board.states[order[i]];
  for (auto& [name, pair] : out.atoms)
    pair = remap(pair);
  for (auto& [b, pair] : out.bundles)
    pair = remap(pair);
  return out;
}

} // namespace

GameBoard read_board(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw BoardFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw BoardFormatError("board: top level must be an object");
  for (const auto& [k, v] : doc.items())
    if (k != "states" && k != "atoms" && k != "bundles")
      throw BoardFormatError("board: unexpected key '" + k + "'");
  if (!doc.contains("states") || !doc["states"].is_array())
    throw BoardFormatError("board: missing \"states\" array");
  std::vector<std::string> names;
  for (const auto& s : doc["states"]) {
    if (!s.is_string() || s.get<std::string>().empty())
      throw BoardFormatError("board: state names must be nonempty strings");
    names.push_back(s.get<std::string>());
  }
  std::sort(names.begin(), names.end());
  GameBoard board;
  try {
    board = GameBoard::with_states(std::move(names));
  } catch (const Error& e) {
    throw BoardFormatError(e.what());
  }
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_object())
      throw BoardFormatError("board: \"atoms\" must be an object");
    for (const auto& [name, rel] : doc["atoms"].items()) {
      if (!Atom::is_valid_name(name))
        throw BoardFormatError("board: invalid atom name '" + name + "'");
      board.atoms[name] = read_pair(board, rel, "atoms." + name);
    }
  }
  if (doc.contains("bundles")) {
    if (!doc["bundles"].is_object())
      throw BoardFormatError("board: \"bundles\" must be an object");
    for (const auto& [key, rel] : doc["bundles"].items()) {
      Bundle b;
      try {
        b = parse_bundle_key(key);
      } catch (const Error& e) {
        throw BoardFormatError(e.what());
      }
      if (b.literals.size() < 2)
        throw BoardFormatError("board: bundle '" + key + "' needs at least two literals");
      board.bundles[b] = read_pair(board, rel, "bundles." + key);
    }
  }
  return board;
}

GameBoard load_board(std::string_view bytes) {
  GameBoard board = read_board(bytes);
  BoardReport rep = check_board(board);
  for (const auto& v : rep.violations)
    if (v.condition == "CON")
      throw ConsistencyError(v.subject, board.states[v.state], describe_set(board, v.set));
  board.fin = rep.fin;
  board.det = rep.det;
  return board;
}

std::string save_board(const GameBoard& input) {
  GameBoard board = sorted_states(input);
  std::vector<std::size_t> order(board.state_count());
  std::iota(order.begin(), order.end(), 0);
  ordered_json doc = ordered_json::object();
  doc["states"] = board.states;
  ordered_json atoms = ordered_json::object();
  for (const auto& [name, pair] : board.atoms)
    atoms[name] = write_pair(board, order, pair);
  doc["atoms"] = std::move(atoms);
  if (!board.bundles.empty()) {
    ordered_json bundles = ordered_json::object();
    for (const auto& [b, pair] : board.bundles)
      bundles[bundle_key(b)] = write_pair(board, order, pair);
    doc["bundles"] = std::move(bundles);
  }
  return doc.dump();
}

} // namespace acg
