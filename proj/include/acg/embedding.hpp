#pragma once

#include "acg/canonical.hpp"

namespace acg {

// Embedding of canonical terms. Idle behaves as the disjunction holding a
// single idle conjunct, so 1 embeds into 1 + a and 1 & a embeds into 1.
bool embeds(const CanonicalTerm& from, const CanonicalTerm& into);
bool move_embeds(const Move& from, const Move& into);
/// Every move of `into` is embedded into by some move of `from`.
bool conjunction_embeds(const Conjunction& from, const Conjunction& into);

/// Sorts moves within conjunctions and conjunctions within the disjunction,
/// bottom-up, under compare_canonical.
CanonicalTerm sort_canonical(const CanonicalTerm& c);

/// Equal up to permutation of conjuncts and disjuncts. Bundles are ordered.
bool isomorphic(const CanonicalTerm& a, const CanonicalTerm& b);

} // namespace acg
