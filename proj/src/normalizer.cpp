#include "acg/normalizer.hpp"

#include <algorithm>

#include "acg/embedding.hpp"

namespace acg {

namespace {

Term push_duals(const Term& t, bool flip) {
  switch (t.kind()) {
  case TermKind::Idle:
    return t;
  case TermKind::Atom:
    return flip ? Term::dual(t) : t;
  case TermKind::Dual:
    return push_duals(t.inner(), !flip);
  case TermKind::Choice1:
  case TermKind::Choice2: {
    TermKind k = t.kind();
    if (flip)
      k = k == TermKind::Choice1 ? TermKind::Choice2 : TermKind::Choice1;
    return Term::binary(k, push_duals(t.left(), flip), push_duals(t.right(), flip));
  }
  case TermKind::Compose:
  case TermKind::Parallel:
    return Term::binary(t.kind(), push_duals(t.left(), flip), push_duals(t.right(), flip));
  }
  throw Error("push_duals: bad term");
}

std::vector<Conjunction> disjuncts_of(const CanonicalTerm& c) {
  if (c.is_idle())
    return {{Move::idle()}};
  return c.disjuncts;
}

CanonicalTerm from_disjuncts(std::vector<Conjunction> ds) {
  if (ds.size() == 1 && ds.front().size() == 1 && ds.front().front().is_idle())
    return CanonicalTerm::idle();
  return CanonicalTerm{std::move(ds)};
}

std::vector<Conjunction> cross_concat(const std::vector<Conjunction>& a, const std::vector<Conjunction>& b) {
  std::vector<Conjunction> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Conjunction k = x;
      k.insert(k.end(), y.begin(), y.end());
      out.push_back(std::move(k));
    }
  return out;
}

// Set of operations over canonical terms, optionally minimizing every
// intermediate result. Minimizing eagerly keeps the cross products small.
struct Algebra {
  bool eager;

  CanonicalTerm finish(std::vector<Conjunction> ds) const;

  CanonicalTerm join(const CanonicalTerm& a, const CanonicalTerm& b) const {
    auto ds = disjuncts_of(a);
    auto rhs = disjuncts_of(b);
    ds.insert(ds.end(), rhs.begin(), rhs.end());
    return finish(std::move(ds));
  }

  CanonicalTerm meet(const CanonicalTerm& a, const CanonicalTerm& b) const {
    return finish(cross_concat(disjuncts_of(a), disjuncts_of(b)));
  }

  CanonicalTerm compose(const CanonicalTerm& a, const CanonicalTerm& b) const {
    if (a.is_idle())
      return b;
    std::vector<Conjunction> out;
    for (const auto& conj : a.disjuncts) {
      std::vector<Conjunction> acc{Conjunction{}};
      for (const auto& m : conj) {
        if (m.is_idle()) {
          acc = cross_concat(acc, disjuncts_of(b));
        } else {
          Move shifted{m.head, compose(m.continuation, b)};
          for (auto& k : acc)
            k.push_back(shifted);
        }
      }
      out.insert(out.end(), std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
    }
    return finish(std::move(out));
  }

  Move fuse(const Move& x, const Move& y) const {
    if (x.is_idle())
      return y;
    if (y.is_idle())
      return x;
    Bundle head = x.head;
    head.literals.insert(head.literals.end(), y.head.literals.begin(), y.head.literals.end());
    return Move{std::move(head), parallel(x.continuation, y.continuation)};
  }

  CanonicalTerm parallel(const CanonicalTerm& a, const CanonicalTerm& b) const {
    if (a.is_idle())
      return b;
    if (b.is_idle())
      return a;
    std::vector<Conjunction> out;
    out.reserve(a.disjuncts.size() * b.disjuncts.size());
    for (const auto& da : a.disjuncts)
      for (const auto& db : b.disjuncts) {
        Conjunction k;
        k.reserve(da.size() * db.size());
        for (const auto& ma : da)
          for (const auto& mb : db)
            k.push_back(fuse(ma, mb));
        out.push_back(std::move(k));
      }
    return finish(std::move(out));
  }

  CanonicalTerm build(const Term& t) const {
    switch (t.kind()) {
    case TermKind::Idle:
      return CanonicalTerm::idle();
    case TermKind::Atom:
      return CanonicalTerm::literal(Literal{t.atom_name(), false});
    case TermKind::Dual:
      if (t.inner().kind() != TermKind::Atom)
        throw Error("canonicalize: term is not in dual normal form");
      return CanonicalTerm::literal(Literal{t.inner().atom_name(), true});
    case TermKind::Choice1:
      return join(build(t.left()), build(t.right()));
    case TermKind::Choice2:
      return meet(build(t.left()), build(t.right()));
    case TermKind::Compose:
      return compose(build(t.left()), build(t.right()));
    case TermKind::Parallel:
      return parallel(build(t.left()), build(t.right()));
    }
    throw Error("canonicalize: bad term");
  }
};

bool move_less(const Move& a, const Move& b) { return compare_moves(a, b) < 0; }
bool conj_less(const Conjunction& a, const Conjunction& b) { return compare_conjunctions(a, b) < 0; }

// Keeps the elements not dominated by another one. `below(x, y)` is the
// embedding direction that makes y redundant; ties between mutually related
// elements keep the one that sorts first. Input must be sorted and unique.
template <typename T, typename Below>
std::vector<T> keep_undominated(std::vector<T> xs, Below below) {
  const std::size_t n = xs.size();
  std::vector<bool> drop(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n && !drop[i]; ++j) {
      if (i == j || !below(xs[j], xs[i]))
        continue;
      if (!below(xs[i], xs[j]) || j < i)
        drop[i] = true;
    }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i])
      out.push_back(std::move(xs[i]));
  return out;
}

// Minimizes one level, assuming every continuation is already minimal and
// sorted.
std::vector<Conjunction> minimize_level(std::vector<Conjunction> ds) {
  for (auto& conj : ds) {
    std::sort(conj.begin(), conj.end(), move_less);
    conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
    // Within a conjunction the move that is embedded into is redundant.
    conj = keep_undominated(std::move(conj), [](const Move& x, const Move& y) { return move_embeds(x, y); });
  }
  std::sort(ds.begin(), ds.end(), conj_less);
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  // Among disjuncts the one that embeds into another is redundant.
  return keep_undominated(std::move(ds),
                          [](const Conjunction& x, const Conjunction& y) { return conjunction_embeds(y, x); });
}

CanonicalTerm Algebra::finish(std::vector<Conjunction> ds) const {
  if (eager)
    ds = minimize_level(std::move(ds));
  return from_disjuncts(std::move(ds));
}

bool canonical_shape(const CanonicalTerm& c) {
  for (const auto& conj : c.disjuncts) {
    if (conj.empty())
      return false;
    for (const auto& m : conj) {
      if (m.is_idle() && !m.continuation.is_idle())
        return false;
      if (!canonical_shape(m.continuation))
        return false;
    }
  }
  return true;
}

bool minimal_shape(const CanonicalTerm& c) {
  if (c.is_idle())
    return true;
  if (c.disjuncts.size() == 1 && c.disjuncts.front().size() == 1 && c.disjuncts.front().front().is_idle())
    return false;
  const auto& ds = c.disjuncts;
  for (const auto& conj : ds) {
    for (const auto& m : conj)
      if (!minimal_shape(m.continuation))
        return false;
    for (std::size_t i = 0; i < conj.size(); ++i)
      for (std::size_t j = 0; j < conj.size(); ++j)
        if (i != j && move_embeds(conj[i], conj[j]))
          return false;
  }
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (i != j && conjunction_embeds(ds[i], ds[j]))
        return false;
  return true;
}

} // namespace

Term dual_normal_form(const Term& t) { return push_duals(t, false); }

CanonicalTerm canonicalize(const Term& t) { return Algebra{false}.build(t); }

CanonicalTerm minimize(const CanonicalTerm& c) {
  if (c.is_idle())
    return c;
  std::vector<Conjunction> ds = c.disjuncts;
  for (auto& conj : ds)
    for (auto& m : conj)
      m.continuation = minimize(m.continuation);
  return from_disjuncts(minimize_level(std::move(ds)));
}

CanonicalTerm normalize(const Term& t) { return Algebra{true}.build(dual_normal_form(t)); }

bool is_canonical(const CanonicalTerm& c) { return canonical_shape(c); }

bool is_minimal_canonical(const CanonicalTerm& c) { return canonical_shape(c) && minimal_shape(c); }

CanonicalTerm canonical_join(const CanonicalTerm& a, const CanonicalTerm& b) { return Algebra{false}.join(a, b); }
CanonicalTerm canonical_meet(const CanonicalTerm& a, const CanonicalTerm& b) { return Algebra{false}.meet(a, b); }
CanonicalTerm canonical_compose(const CanonicalTerm& a, const CanonicalTerm& b) {
  return Algebra{false}.compose(a, b);
}
CanonicalTerm canonical_parallel(const CanonicalTerm& a, const CanonicalTerm& b) {
  return Algebra{false}.parallel(a, b);
}

} // namespace acg
