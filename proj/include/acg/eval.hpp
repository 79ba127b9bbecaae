#pragma once

#include <span>
#include <string>
#include <vector>

#include "acg/board.hpp"
#include "acg/canonical.hpp"
#include "acg/term.hpp"

namespace acg {

class EvaluationError : public Error {
public:
  using Error::Error;
};

class UnknownAtomError : public EvaluationError {
public:
  explicit UnknownAtomError(const std::string& atom) : EvaluationError("board has no relation for atom '" + atom + "'") {}
};

class UnresolvableBundleError : public EvaluationError {
public:
  explicit UnresolvableBundleError(const std::string& key)
      : EvaluationError("bundle '" + key + "' has no consistent relation on this board") {}
};

// Forcing clauses:
//   1        s forces X iff s is in X (both players)
//   g^d      players swapped
//   G + H    player 1 union, player 2 intersection
//   G & H    player 1 intersection, player 2 union
//   G ; H    s forces X iff s forces {t : t forces X in H} in G
// Terms with || are evaluated through their normal form, whose bundles
// resolve through the board.
RelationPair evaluate(const GameBoard& board, const Term& t);
OutcomeRelation eval_outcome(const GameBoard& board, const Term& t, Player player);
RelationPair evaluate_canonical(const GameBoard& board, const CanonicalTerm& c);

/// Explicit board data if present (directly, or as the dual of the bundle of
/// underlying atoms when every literal is dualized), otherwise the default
/// intersection product.
RelationPair resolve_bundle(const GameBoard& board, const Bundle& b);

/// s forces X iff each literal l of b forces some Y_l from s and the
/// intersection of the Y_l lies in X. Throws UnresolvableBundleError if the
/// product pair is inconsistent.
RelationPair default_bundle_pair(const GameBoard& board, const Bundle& b);
OutcomeRelation default_bundle_relation(const GameBoard& board, const Bundle& b, Player player);

bool holds_identity(const GameBoard& board, const Term& a, const Term& b);
bool holds_inclusion(const GameBoard& board, const Term& a, const Term& b, Player player);

/// Postfix program for repeated evaluation of one term over many boards.
class CompiledTerm {
public:
  enum class ParallelMode {
    Reject,  // throw on ||
    Product, // interpret || directly as the intersection product
  };

  explicit CompiledTerm(const Term& t, ParallelMode mode = ParallelMode::Reject);

  /// Distinct atom names, in slot order.
  const std::vector<std::string>& atoms() const { return atoms_; }

  /// `slots[i]` holds the relations of atoms()[i].
  RelationPair run(std::span<const RelationPair* const> slots, std::size_t states) const;
  RelationPair run(const GameBoard& board) const;

private:
  enum class Op : std::uint8_t { Idle, Atom, Dual, Choice1, Choice2, Compose, Parallel };
  struct Instr {
    Op op;
    std::uint16_t slot;
  };

  void emit(const Term& t, ParallelMode mode);

  std::vector<Instr> code_;
  std::vector<std::string> atoms_;
  std::size_t max_stack_ = 0;
};

} // namespace acg
