#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "acg/board.hpp"
#include "acg/term.hpp"

namespace acg {

class LimitError : public Error {
public:
  using Error::Error;
};

struct BoardRequirements {
  bool con = true;
  bool fin = false;
  bool det = false;
};

inline constexpr std::size_t kMaxEnumStates = 3;
/// Limit for enumerate_boards; the enumerator itself only refuses overflow.
inline constexpr std::size_t kMaxEnumAtoms = 2;

/// Compact board used inside enumeration loops: relations by atom index.
struct BoardView {
  std::size_t states = 0;
  std::vector<RelationPair> atoms;
};

/// Every board over the given states and atoms whose families are upward
/// closed and which meets the requirements, without duplicates. Boards are
/// indexed in mixed radix over (atom, state) choices of a family pair.
/// When the number of boards does not fit in 64 bits, count() saturates and
/// only random() may be used.
class BoardEnumerator {
public:
  BoardEnumerator(std::size_t states, std::vector<std::string> atoms, BoardRequirements req = {});

  std::uint64_t count() const { return count_; }
  bool count_exact() const { return exact_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t states() const { return states_; }
  /// Family pairs allowed at one state.
  const std::vector<std::pair<Family, Family>>& state_choices() const { return choices_; }

  /// Board number `index` (0 <= index < count()).
  void decode(std::uint64_t index, BoardView& out) const;
  GameBoard board(std::uint64_t index) const;
  GameBoard to_board(const BoardView& view) const;
  /// Uniformly random board.
  void random(std::mt19937_64& rng, BoardView& out) const;

  /// Sequential traversal.
  bool next(BoardView& out);
  void reset() { cursor_ = 0; }

private:
  std::size_t states_;
  std::vector<std::string> atoms_;
  std::vector<std::pair<Family, Family>> choices_;
  std::uint64_t count_ = 0;
  bool exact_ = true;
  std::uint64_t cursor_ = 0;
};

std::vector<GameBoard> enumerate_boards(std::size_t states, const std::set<Atom>& atoms, BoardRequirements req = {});

/// Random consistent board, deterministic in the seed. Relations are drawn
/// as random generators, closed upward, and consistency is repaired by
/// dropping the offending player-2 sets. Requested bundles get explicit
/// relations drawn the same way.
GameBoard sample_board(std::size_t states, const std::set<Atom>& atoms, const std::vector<Bundle>& bundles,
                       std::uint64_t seed);

struct SearchBudget {
  /// Sizes with more boards than this are sampled instead of enumerated.
  std::uint64_t exhaustive_limit = 300000;
  std::uint64_t samples = 300000;
  std::uint64_t seed = 0x5eed;
};

/// First consistent board, by increasing size from one state, on which the
/// two parallel-free terms evaluate differently.
std::optional<GameBoard> find_distinguishing_board(const Term& a, const Term& b, std::size_t max_states,
                                                   const SearchBudget& budget = {});

} // namespace acg
