#include "acg/canonical.hpp"

#include "acg/text.hpp"

namespace acg {

CanonicalTerm CanonicalTerm::literal(const Literal& l) {
  return {{{Move{Bundle{{l}}, CanonicalTerm::idle()}}}};
}

bool operator==(const CanonicalTerm& a, const CanonicalTerm& b) { return a.disjuncts == b.disjuncts; }

std::strong_ordering compare_moves(const Move& a, const Move& b) {
  if (auto c = a.head <=> b.head; c != 0)
    return c;
  return compare_canonical(a.continuation, b.continuation);
}

std::strong_ordering compare_conjunctions(const Conjunction& a, const Conjunction& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare_moves(a[i], b[i]); c != 0)
      return c;
  return a.size() <=> b.size();
}

std::strong_ordering compare_canonical(const CanonicalTerm& a, const CanonicalTerm& b) {
  // Idle has no disjuncts and so sorts first.
  std::size_t n = std::min(a.disjuncts.size(), b.disjuncts.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare_conjunctions(a.disjuncts[i], b.disjuncts[i]); c != 0)
      return c;
  return a.disjuncts.size() <=> b.disjuncts.size();
}

Term bundle_term(const Bundle& b) {
  if (b.is_idle())
    return Term::idle();
  Term t = Term::literal(b.literals.front());
  for (std::size_t i = 1; i < b.literals.size(); ++i)
    t = Term::parallel(t, Term::literal(b.literals[i]));
  return t;
}

namespace {

bool single_move(const CanonicalTerm& c) {
  return c.disjuncts.size() == 1 && c.disjuncts.front().size() == 1 &&
         !c.disjuncts.front().front().is_idle();
}

Term move_term(const Move& m) {
  if (m.is_idle())
    return Term::idle();
  Term t = bundle_term(m.head);
  const CanonicalTerm* rest = &m.continuation;
  while (single_move(*rest)) {
    const Move& next = rest->disjuncts.front().front();
    t = Term::compose(t, bundle_term(next.head));
    rest = &next.continuation;
  }
  if (!rest->is_idle())
    t = Term::compose(t, to_term(*rest));
  return t;
}

Term conjunction_term(const Conjunction& k) {
  Term t = move_term(k.front());
  for (std::size_t i = 1; i < k.size(); ++i)
    t = Term::choice2(t, move_term(k[i]));
  return t;
}

} // namespace

Term to_term(const CanonicalTerm& c) {
  if (c.is_idle())
    return Term::idle();
  Term t = conjunction_term(c.disjuncts.front());
  for (std::size_t i = 1; i < c.disjuncts.size(); ++i)
    t = Term::choice1(t, conjunction_term(c.disjuncts[i]));
  return t;
}

std::string print_canonical(const CanonicalTerm& c) { return print_term(to_term(c)); }

std::string bundle_key(const Bundle& b) {
  std::string out;
  for (std::size_t i = 0; i < b.literals.size(); ++i) {
    if (i)
      out += "||";
    out += b.literals[i].atom.name();
    if (b.literals[i].dualized)
      out += "^d";
  }
  return out;
}

Bundle parse_bundle_key(std::string_view key) {
  Bundle b;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = key.find("||", start);
    std::string part(key.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(part);
    bool dual = part.size() > 2 && part.ends_with("^d");
    if (dual)
      part.resize(part.size() - 2);
    trim(part);
    if (!Atom::is_valid_name(part))
      throw Error("invalid bundle key '" + std::string(key) + "'");
    b.literals.push_back(Literal{Atom(part), dual});
    if (end == std::string_view::npos)
      break;
    start = end + 2;
  }
  return b;
}

} // namespace acg
