#pragma once

#include <compare>
#include <string>
#include <vector>

#include "acg/term.hpp"

namespace acg {

/// Ordered sequence of literals played simultaneously. The empty bundle is
/// the reserved idle head: it only ever heads an idle conjunct, whose
/// continuation is Idle.
struct Bundle {
  std::vector<Literal> literals;

  bool is_idle() const { return literals.empty(); }

  friend bool operator==(const Bundle&, const Bundle&) = default;
  friend auto operator<=>(const Bundle&, const Bundle&) = default;
};

struct Move;
using Conjunction = std::vector<Move>;

/// Either Idle (no disjuncts) or a disjunction of conjunctions of moves.
struct CanonicalTerm {
  std::vector<Conjunction> disjuncts;

  bool is_idle() const { return disjuncts.empty(); }

  static CanonicalTerm idle() { return {}; }
  static CanonicalTerm literal(const Literal& l);

  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&);
};

struct Move {
  Bundle head;
  CanonicalTerm continuation;

  static Move idle() { return {}; }
  bool is_idle() const { return head.is_idle(); }

  friend bool operator==(const Move&, const Move&) = default;
};

std::strong_ordering compare_canonical(const CanonicalTerm& a, const CanonicalTerm& b);
std::strong_ordering compare_moves(const Move& a, const Move& b);
std::strong_ordering compare_conjunctions(const Conjunction& a, const Conjunction& b);

/// Renders a canonical term back into the term language. Bundles become
/// left-nested parallel chains, chains of single moves become composition
/// chains, and the idle conjunct becomes 1.
Term to_term(const CanonicalTerm& c);
Term bundle_term(const Bundle& b);

std::string print_canonical(const CanonicalTerm& c);

/// Text key for a bundle, e.g. "a||b^d".
std::string bundle_key(const Bundle& b);
Bundle parse_bundle_key(std::string_view key);

} // namespace acg
