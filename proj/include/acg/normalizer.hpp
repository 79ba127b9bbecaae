#pragma once

#include "acg/canonical.hpp"
#include "acg/term.hpp"

namespace acg {

/// Pushes every dual down to the atoms: (x^d)^d = x, de Morgan for the two
/// choices, and duals distribute over composition and parallel; 1^d = 1.
Term dual_normal_form(const Term& t);

/// Structural elimination into disjunctions of conjunctions of moves.
/// Expects a term in dual normal form; throws acg::Error otherwise.
/// No redundancy is removed here.
CanonicalTerm canonicalize(const Term& t);

/// Removes embedded conjuncts and disjuncts, recursively, until no two
/// siblings embed into one another. The result is also sorted.
CanonicalTerm minimize(const CanonicalTerm& c);

/// Minimal canonical, sorted normal form. Equivalent terms of the algebra
/// have structurally equal normal forms.
CanonicalTerm normalize(const Term& t);

bool is_canonical(const CanonicalTerm& c);
bool is_minimal_canonical(const CanonicalTerm& c);

// The lattice and action operations on canonical terms. Results are
// canonical but not minimized.
CanonicalTerm canonical_join(const CanonicalTerm& a, const CanonicalTerm& b);
CanonicalTerm canonical_meet(const CanonicalTerm& a, const CanonicalTerm& b);
CanonicalTerm canonical_compose(const CanonicalTerm& a, const CanonicalTerm& b);
CanonicalTerm canonical_parallel(const CanonicalTerm& a, const CanonicalTerm& b);

} // namespace acg
