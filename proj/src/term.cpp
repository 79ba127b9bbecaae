#include "acg/term.hpp"

#include <algorithm>
#include <cctype>

namespace acg {

struct Term::Node {
  TermKind kind;
  std::optional<Atom> name;
  std::vector<Term> children;
};

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_))
    throw Error("invalid atom name '" + name_ + "'");
}

bool Atom::is_valid_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front())))
    return false;
  for (char c : name.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_')
      return false;
  }
  return true;
}

Term Term::idle() {
  static const Term instance(std::make_shared<const Node>(Node{TermKind::Idle, {}, {}}));
  return instance;
}

Term Term::atom(const Atom& a) {
  return Term(std::make_shared<const Node>(Node{TermKind::Atom, a, {}}));
}

Term Term::dual(Term inner) {
  return Term(std::make_shared<const Node>(Node{TermKind::Dual, {}, {std::move(inner)}}));
}

Term Term::binary(TermKind kind, Term left, Term right) {
  switch (kind) {
  case TermKind::Choice1:
  case TermKind::Choice2:
  case TermKind::Compose:
  case TermKind::Parallel:
    break;
  default:
    throw Error("binary: not a binary term kind");
  }
  return Term(std::make_shared<const Node>(Node{kind, {}, {std::move(left), std::move(right)}}));
}

Term Term::choice1(Term left, Term right) {
  return binary(TermKind::Choice1, std::move(left), std::move(right));
}
Term Term::choice2(Term left, Term right) {
  return binary(TermKind::Choice2, std::move(left), std::move(right));
}
Term Term::compose(Term left, Term right) {
  return binary(TermKind::Compose, std::move(left), std::move(right));
}
Term Term::parallel(Term left, Term right) {
  return binary(TermKind::Parallel, std::move(left), std::move(right));
}

Term Term::literal(const Literal& l) {
  Term t = atom(l.atom);
  return l.dualized ? dual(std::move(t)) : t;
}

TermKind Term::kind() const { return node_->kind; }

bool Term::is_binary() const {
  switch (kind()) {
  case TermKind::Choice1:
  case TermKind::Choice2:
  case TermKind::Compose:
  case TermKind::Parallel:
    return true;
  default:
    return false;
  }
}

const Atom& Term::atom_name() const {
  if (kind() != TermKind::Atom)
    throw Error("atom_name: not an atom");
  return *node_->name;
}

const Term& Term::inner() const {
  if (kind() != TermKind::Dual)
    throw Error("inner: not a dual");
  return node_->children[0];
}

const Term& Term::left() const {
  if (!is_binary())
    throw Error("left: not a binary term");
  return node_->children[0];
}

const Term& Term::right() const {
  if (!is_binary())
    throw Error("right: not a binary term");
  return node_->children[1];
}

bool operator==(const Term& a, const Term& b) { return compare_terms(a, b) == 0; }

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
  case TermKind::Idle:
  case TermKind::Atom:
    return 1;
  case TermKind::Dual:
    return 1 + term_size(t.inner());
  default:
    return 1 + term_size(t.left()) + term_size(t.right());
  }
}

std::size_t term_depth(const Term& t) {
  switch (t.kind()) {
  case TermKind::Idle:
  case TermKind::Atom:
    return 1;
  case TermKind::Dual:
    return 1 + term_depth(t.inner());
  default:
    return 1 + std::max(term_depth(t.left()), term_depth(t.right()));
  }
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  switch (a.kind()) {
  case TermKind::Idle:
    return std::strong_ordering::equal;
  case TermKind::Atom:
    return a.atom_name().name() <=> b.atom_name().name();
  case TermKind::Dual:
    return compare_terms(a.inner(), b.inner());
  default:
    if (auto c = compare_terms(a.left(), b.left()); c != 0)
      return c;
    return compare_terms(a.right(), b.right());
  }
}

namespace {

void collect_atoms(const Term& t, std::set<Atom>& out) {
  switch (t.kind()) {
  case TermKind::Idle:
    return;
  case TermKind::Atom:
    out.insert(t.atom_name());
    return;
  case TermKind::Dual:
    collect_atoms(t.inner(), out);
    return;
  default:
    collect_atoms(t.left(), out);
    collect_atoms(t.right(), out);
  }
}

} // namespace

std::set<Atom> atoms_of(const Term& t) {
  std::set<Atom> out;
  collect_atoms(t, out);
  return out;
}

bool contains_parallel(const Term& t) {
  switch (t.kind()) {
  case TermKind::Idle:
  case TermKind::Atom:
    return false;
  case TermKind::Parallel:
    return true;
  case TermKind::Dual:
    return contains_parallel(t.inner());
  default:
    return contains_parallel(t.left()) || contains_parallel(t.right());
  }
}

namespace {

bool literal_chain(const Term& t) {
  switch (t.kind()) {
  case TermKind::Atom:
    return true;
  case TermKind::Dual:
    return t.inner().kind() == TermKind::Atom;
  case TermKind::Parallel:
    return literal_chain(t.left()) && literal_chain(t.right());
  default:
    return false;
  }
}

} // namespace

bool parallel_only_on_literals(const Term& t) {
  switch (t.kind()) {
  case TermKind::Idle:
  case TermKind::Atom:
    return true;
  case TermKind::Parallel:
    return literal_chain(t);
  case TermKind::Dual:
    return !contains_parallel(t.inner());
  default:
    return parallel_only_on_literals(t.left()) && parallel_only_on_literals(t.right());
  }
}

} // namespace acg
