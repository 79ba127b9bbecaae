#include "acg/eval.hpp"

#include <algorithm>
#include <optional>

#include "acg/normalizer.hpp"

namespace acg {

namespace {

RelationPair identity_pair(std::size_t n) {
  auto id = OutcomeRelation::identity(n);
  return {id, id};
}

RelationPair literal_pair(const GameBoard& board, const Literal& l) {
  auto it = board.atoms.find(l.atom.name());
  if (it == board.atoms.end())
    throw UnknownAtomError(l.atom.name());
  return l.dualized ? it->second.swapped() : it->second;
}

RelationPair join_pair(const RelationPair& a, const RelationPair& b) {
  return {a.first.unite(b.first), a.second.intersect(b.second)};
}

RelationPair meet_pair(const RelationPair& a, const RelationPair& b) {
  return {a.first.intersect(b.first), a.second.unite(b.second)};
}

RelationPair then_pair(const RelationPair& a, const RelationPair& b) {
  return {a.first.then(b.first), a.second.then(b.second)};
}

RelationPair product_pair(const RelationPair& a, const RelationPair& b) {
  return {a.first.intersection_product(b.first), a.second.intersection_product(b.second)};
}

} // namespace

RelationPair default_bundle_pair(const GameBoard& board, const Bundle& b) {
  if (b.is_idle())
    return identity_pair(board.state_count());
  RelationPair acc = literal_pair(board, b.literals.front());
  for (std::size_t i = 1; i < b.literals.size(); ++i)
    acc = product_pair(acc, literal_pair(board, b.literals[i]));
  if (!satisfies_con(acc))
    throw UnresolvableBundleError(bundle_key(b));
  return acc;
}

OutcomeRelation default_bundle_relation(const GameBoard& board, const Bundle& b, Player player) {
  return default_bundle_pair(board, b).of(player);
}

RelationPair resolve_bundle(const GameBoard& board, const Bundle& b) {
  if (b.is_idle())
    return identity_pair(board.state_count());
  if (b.literals.size() == 1)
    return literal_pair(board, b.literals.front());
  if (auto it = board.bundles.find(b); it != board.bundles.end())
    return it->second;
  bool all_dual = std::all_of(b.literals.begin(), b.literals.end(), [](const Literal& l) { return l.dualized; });
  if (all_dual) {
    Bundle plain = b;
    for (auto& l : plain.literals)
      l.dualized = false;
    if (auto it = board.bundles.find(plain); it != board.bundles.end())
      return it->second.swapped();
  }
  return default_bundle_pair(board, b);
}

RelationPair evaluate_canonical(const GameBoard& board, const CanonicalTerm& c) {
  const std::size_t n = board.state_count();
  if (c.is_idle())
    return identity_pair(n);
  std::optional<RelationPair> result;
  for (const auto& conj : c.disjuncts) {
    std::optional<RelationPair> k;
    for (const auto& m : conj) {
      RelationPair r = m.is_idle() ? identity_pair(n)
                                   : then_pair(resolve_bundle(board, m.head), evaluate_canonical(board, m.continuation));
      k = k ? meet_pair(*k, r) : r;
    }
    result = result ? join_pair(*result, *k) : *k;
  }
  return *result;
}

RelationPair evaluate(const GameBoard& board, const Term& t) {
  if (contains_parallel(t))
    return evaluate_canonical(board, normalize(t));
  return CompiledTerm(t).run(board);
}

OutcomeRelation eval_outcome(const GameBoard& board, const Term& t, Player player) {
  return evaluate(board, t).of(player);
}

bool holds_identity(const GameBoard& board, const Term& a, const Term& b) {
  return evaluate(board, a) == evaluate(board, b);
}

bool holds_inclusion(const GameBoard& board, const Term& a, const Term& b, Player player) {
  return eval_outcome(board, a, player).subset_of(eval_outcome(board, b, player));
}

CompiledTerm::CompiledTerm(const Term& t, ParallelMode mode) {
  emit(t, mode);
  std::size_t depth = 0;
  for (const auto& i : code_) {
    switch (i.op) {
    case Op::Idle:
    case Op::Atom:
      ++depth;
      break;
    case Op::Dual:
      break;
    default:
      --depth;
    }
    max_stack_ = std::max(max_stack_, depth);
  }
}

void CompiledTerm::emit(const Term& t, ParallelMode mode) {
  switch (t.kind()) {
  case TermKind::Idle:
    code_.push_back({Op::Idle, 0});
    return;
  case TermKind::Atom: {
    const std::string& name = t.atom_name().name();
    auto it = std::find(atoms_.begin(), atoms_.end(), name);
    auto slot = static_cast<std::uint16_t>(it - atoms_.begin());
    if (it == atoms_.end())
      atoms_.push_back(name);
    code_.push_back({Op::Atom, slot});
    return;
  }
  case TermKind::Dual:
    emit(t.inner(), mode);
    code_.push_back({Op::Dual, 0});
    return;
  case TermKind::Parallel:
    if (mode == ParallelMode::Reject)
      throw EvaluationError("compiled evaluation does not interpret ||");
    [[fallthrough]];
  default:
    emit(t.left(), mode);
    emit(t.right(), mode);
    Op op = t.kind() == TermKind::Choice1   ? Op::Choice1
            : t.kind() == TermKind::Choice2 ? Op::Choice2
            : t.kind() == TermKind::Compose ? Op::Compose
                                            : Op::Parallel;
    code_.push_back({op, 0});
  }
}

RelationPair CompiledTerm::run(std::span<const RelationPair* const> slots, std::size_t states) const {
  std::vector<RelationPair> stack;
  stack.reserve(max_stack_);
  const RelationPair id = identity_pair(states);
  for (const auto& i : code_) {
    switch (i.op) {
    case Op::Idle:
      stack.push_back(id);
      break;
    case Op::Atom:
      stack.push_back(*slots[i.slot]);
      break;
    case Op::Dual:
      std::swap(stack.back().first, stack.back().second);
      break;
    default: {
      RelationPair rhs = stack.back();
      stack.pop_back();
      RelationPair& lhs = stack.back();
      switch (i.op) {
      case Op::Choice1: lhs = join_pair(lhs, rhs); break;
      case Op::Choice2: lhs = meet_pair(lhs, rhs); break;
      case Op::Compose: lhs = then_pair(lhs, rhs); break;
      default: lhs = product_pair(lhs, rhs); break;
      }
    }
    }
  }
  return stack.back();
}

RelationPair CompiledTerm::run(const GameBoard& board) const {
  std::vector<const RelationPair*> slots;
  slots.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    auto it = board.atoms.find(a);
    if (it == board.atoms.end())
      throw UnknownAtomError(a);
    slots.push_back(&it->second);
  }
  return run(slots, board.state_count());
}

} // namespace acg
