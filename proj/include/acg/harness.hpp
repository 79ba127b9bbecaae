#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acg/canonical.hpp"
#include "acg/term.hpp"

namespace acg {

struct EquivalenceVerdict {
  bool equivalent;
  CanonicalTerm nf1;
  CanonicalTerm nf2;
};

/// Equivalent iff the normal forms are isomorphic.
EquivalenceVerdict decide_equiv(const Term& a, const Term& b);

/// Join order of the lattice: a <= b iff a + b and b have isomorphic normal
/// forms. Not claimed to coincide with two-sided relation inclusion.
bool lattice_leq(const Term& a, const Term& b);

/// Deterministic generator state for trial `index` of a run seeded by `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

struct TermShape {
  std::size_t max_depth = 4;
  std::size_t atom_count = 3; // atoms a, b, c, ...
  bool parallel = true;
};

std::vector<Atom> atom_pool(std::size_t count);
Term random_term(std::mt19937_64& rng, const TermShape& shape);

struct FuzzConfig {
  std::size_t trials = 200;
  std::size_t max_depth = 4;
  std::size_t atom_count = 3;
  std::uint64_t seed = 7;
  std::size_t board_states = 2;
  std::size_t boards_per_trial = 20;
};

struct Counterexample {
  std::string property;
  std::vector<std::string> inputs;
  std::string expected;
  std::string actual;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct RunReport {
  std::string campaign;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<Counterexample> first_counterexample;
  std::chrono::milliseconds elapsed{0};
  /// Per-property (checked, failed) counts.
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> by_property;

  void record(const std::string& property, bool ok, const Counterexample& cx);
  /// Human-readable summary; deterministic (no timing).
  std::string summary() const;
  /// One-line JSON mirroring the report fields.
  std::string json_line() const;
};

/// One equational axiom with metavariables x, y, z (terms) and ga, gb
/// (atomic games).
struct AxiomSchema {
  std::string name;
  std::string lhs;
  std::string rhs;
};

const std::vector<AxiomSchema>& equational_axioms();

/// Replaces metavariable atoms of `pattern` by the given terms.
Term instantiate(const Term& pattern, const std::map<std::string, Term>& binding);

/// For every schema, `trials` random instantiations; normal forms of both
/// sides must be structurally equal.
RunReport fuzz_axioms(const FuzzConfig& config);

/// Parallel-free soundness campaigns: normal forms agree with their source
/// term on boards, monotonicity of composition, and agreement of terms
/// declared equivalent. Also asserts normal-form shape.
RunReport fuzz_soundness(const FuzzConfig& config);

using NormalizeFn = CanonicalTerm (*)(const Term&);
/// Same campaigns with a substitute normalizer (mutation testing).
RunReport fuzz_soundness(const FuzzConfig& config, NormalizeFn nf);

struct CgSemanticsRow {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
};

/// Exploratory: how often each parallel axiom holds when || is read directly
/// as the intersection product of outcome relations.
std::vector<CgSemanticsRow> cg_semantics_report(const FuzzConfig& config);

} // namespace acg
