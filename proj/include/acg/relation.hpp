#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace acg {

inline constexpr std::size_t kMaxStates = 6;

/// Subset of states as a bitmask over state indices.
using StateSet = std::uint32_t;
/// Family of state sets: bit X is set iff the set with mask X belongs to it.
using Family = std::uint64_t;

enum class Player { One = 1, Two = 2 };

inline Player other(Player p) { return p == Player::One ? Player::Two : Player::One; }

namespace family {

inline bool contains(Family f, StateSet x) { return (f >> x) & 1U; }

/// All subsets of an n-state universe.
Family universe(std::size_t n);
/// Smallest upward-closed family containing f.
Family upward_closure(Family f, std::size_t n);
bool is_upward_closed(Family f, std::size_t n);
/// Minimal members of an upward-closed family.
std::vector<StateSet> minimal_sets(Family f, std::size_t n);
/// {S - X : X in f}.
Family complement_sets(Family f, std::size_t n);
/// Every upward-closed family over n states, in increasing mask order.
std::vector<Family> all_upward_closed(std::size_t n);

} // namespace family

/// Relation between states and sets of states, closed upward in the set
/// argument. One family per state.
class OutcomeRelation {
public:
  OutcomeRelation() = default;
  explicit OutcomeRelation(std::size_t states) : n_(states) {}

  /// Relation in which every state forces exactly the sets containing it.
  static OutcomeRelation identity(std::size_t states);
  /// Smallest upward-closed relation containing the (state, set) pairs.
  static OutcomeRelation monotone_close(std::size_t states, const std::vector<std::pair<std::size_t, StateSet>>& generators);

  std::size_t state_count() const { return n_; }
  Family at(std::size_t s) const { return fam_[s]; }
  void set(std::size_t s, Family f) { fam_[s] = f; }
  bool holds(std::size_t s, StateSet x) const { return family::contains(fam_[s], x); }
  bool empty() const;

  bool is_upward_closed() const;
  /// Minimal generator pairs in (state, mask) order.
  std::vector<std::pair<std::size_t, StateSet>> generators() const;

  OutcomeRelation unite(const OutcomeRelation& o) const;
  OutcomeRelation intersect(const OutcomeRelation& o) const;
  /// s forces X in first-then-next iff s forces {t : t forces X in next}.
  OutcomeRelation then(const OutcomeRelation& next) const;
  /// s relates to X iff s relates to Y1 here, to Y2 in o, and Y1 n Y2 is in X.
  OutcomeRelation intersection_product(const OutcomeRelation& o) const;
  bool subset_of(const OutcomeRelation& o) const;

  friend bool operator==(const OutcomeRelation& a, const OutcomeRelation& b);

private:
  std::size_t n_ = 0;
  std::array<Family, kMaxStates> fam_{};
};

/// Outcome relations of both players.
struct RelationPair {
  OutcomeRelation first;
  OutcomeRelation second;

  const OutcomeRelation& of(Player p) const { return p == Player::One ? first : second; }
  RelationPair swapped() const { return {second, first}; }

  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

bool satisfies_con(const RelationPair& r);
bool satisfies_fin(const RelationPair& r);
/// Determinacy: s forces S - X for player 2 iff s does not force X for
/// player 1.
bool satisfies_det(const RelationPair& r);

} // namespace acg
