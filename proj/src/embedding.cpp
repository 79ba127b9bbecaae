#include "acg/embedding.hpp"

#include <algorithm>

namespace acg {

namespace {

const std::vector<Conjunction>& idle_disjuncts() {
  static const std::vector<Conjunction> single{{Move::idle()}};
  return single;
}

const std::vector<Conjunction>& disjuncts_of(const CanonicalTerm& c) {
  return c.is_idle() ? idle_disjuncts() : c.disjuncts;
}

} // namespace

bool move_embeds(const Move& from, const Move& into) {
  return from.head == into.head && embeds(from.continuation, into.continuation);
}

bool conjunction_embeds(const Conjunction& from, const Conjunction& into) {
  return std::all_of(into.begin(), into.end(), [&](const Move& target) {
    return std::any_of(from.begin(), from.end(),
                       [&](const Move& source) { return move_embeds(source, target); });
  });
}

bool embeds(const CanonicalTerm& from, const CanonicalTerm& into) {
  if (from.is_idle() && into.is_idle())
    return true;
  const auto& src = disjuncts_of(from);
  const auto& dst = disjuncts_of(into);
  return std::all_of(src.begin(), src.end(), [&](const Conjunction& d) {
    return std::any_of(dst.begin(), dst.end(),
                       [&](const Conjunction& e) { return conjunction_embeds(d, e); });
  });
}

CanonicalTerm sort_canonical(const CanonicalTerm& c) {
  CanonicalTerm out = c;
  for (auto& conj : out.disjuncts) {
    for (auto& m : conj)
      m.continuation = sort_canonical(m.continuation);
    std::sort(conj.begin(), conj.end(), [](const Move& a, const Move& b) { return compare_moves(a, b) < 0; });
  }
  std::sort(out.disjuncts.begin(), out.disjuncts.end(),
            [](const Conjunction& a, const Conjunction& b) { return compare_conjunctions(a, b) < 0; });
  return out;
}

bool isomorphic(const CanonicalTerm& a, const CanonicalTerm& b) { return sort_canonical(a) == sort_canonical(b); }

} // namespace acg
