#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acg/canonical.hpp"
#include "acg/relation.hpp"

namespace acg {

/// Finite game board: states, both players' outcome relations per atom and,
/// optionally, explicit relations for parallel bundles.
struct GameBoard {
  std::vector<std::string> states;
  std::map<std::string, RelationPair> atoms;
  std::map<Bundle, RelationPair> bundles;
  bool fin = false;
  bool det = false;

  std::size_t state_count() const { return states.size(); }
  std::optional<std::size_t> state_index(std::string_view name) const;
  /// Fresh board with no relations; states must be distinct.
  static GameBoard with_states(std::vector<std::string> names);
  /// Relation pair in which neither player forces anything.
  RelationPair empty_pair() const;

  friend bool operator==(const GameBoard&, const GameBoard&) = default;
};

/// Default state names s0, s1, ...
std::vector<std::string> default_state_names(std::size_t n);

struct Violation {
  std::string subject; // atom name or bundle key
  Player player;
  std::size_t state;
  StateSet set;
  std::string condition; // "MON", "CON", "FIN" or "DET"
};

struct BoardReport {
  bool mon = true;
  bool con = true;
  bool fin = true;
  bool det = true;
  std::vector<Violation> violations;
};

BoardReport check_board(const GameBoard& board);

std::string describe_set(const GameBoard& board, StateSet x);
std::string describe(const GameBoard& board, const Violation& v);

} // namespace acg
