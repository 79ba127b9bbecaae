#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Name of an atomic game. The idle game is not an atom.
class Atom {
public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

  static bool is_valid_name(std::string_view name);

private:
  std::string name_;
};

/// An atom or a dualized atom.
struct Literal {
  Atom atom;
  bool dualized = false;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Order of the enumerators is the tag order used by compare_terms.
enum class TermKind { Idle, Atom, Dual, Compose, Parallel, Choice2, Choice1 };

/// Immutable game term. Copies share structure.
class Term {
public:
  static Term idle();
  static Term atom(const Atom& a);
  static Term atom(std::string name) { return atom(Atom(std::move(name))); }
  static Term dual(Term inner);
  static Term choice1(Term left, Term right);
  static Term choice2(Term left, Term right);
  static Term compose(Term left, Term right);
  static Term parallel(Term left, Term right);
  static Term binary(TermKind kind, Term left, Term right);
  static Term literal(const Literal& l);

  TermKind kind() const;
  bool is_binary() const;

  /// Only valid for TermKind::Atom.
  const Atom& atom_name() const;
  /// Operand of Dual.
  const Term& inner() const;
  const Term& left() const;
  const Term& right() const;

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::size_t term_size(const Term& t);

/// Total order: tag first, atoms by name, composites lexicographically by
/// children.
std::strong_ordering compare_terms(const Term& a, const Term& b);

std::set<Atom> atoms_of(const Term& t);

bool contains_parallel(const Term& t);
/// True if every || node combines only literals, i.e. parallel play survives
/// only as bundles of atomic moves.
bool parallel_only_on_literals(const Term& t);

/// Depth of the tree; a leaf has depth 1.
std::size_t term_depth(const Term& t);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare_terms(a, b) < 0; }
};

} // namespace acg
