#include "acg/harness.hpp"

#include <sstream>

#include <json.hpp>

#include "acg/board_io.hpp"
#include "acg/boards.hpp"
#include "acg/embedding.hpp"
#include "acg/eval.hpp"
#include "acg/normalizer.hpp"
#include "acg/text.hpp"

namespace acg {

EquivalenceVerdict decide_equiv(const Term& a, const Term& b) {
  CanonicalTerm n1 = normalize(a);
  CanonicalTerm n2 = normalize(b);
  bool eq = isomorphic(n1, n2);
  return {eq, std::move(n1), std::move(n2)};
}

bool lattice_leq(const Term& a, const Term& b) {
  return isomorphic(normalize(Term::choice1(a, b)), normalize(b));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Term random_term_at(std::mt19937_64& rng, const TermShape& shape, const std::vector<Atom>& pool, std::size_t depth) {
  if (depth <= 1 || draw(rng, 4) == 0) {
    if (pool.empty() || draw(rng, 5) == 0)
      return Term::idle();
    return Term::atom(pool[draw(rng, pool.size())]);
  }
  const std::size_t ops = shape.parallel ? 5 : 4;
  switch (draw(rng, ops)) {
  case 0:
    return Term::dual(random_term_at(rng, shape, pool, depth - 1));
  case 1: {
    Term l = random_term_at(rng, shape, pool, depth - 1);
    return Term::choice1(l, random_term_at(rng, shape, pool, depth - 1));
  }
  case 2: {
    Term l = random_term_at(rng, shape, pool, depth - 1);
    return Term::choice2(l, random_term_at(rng, shape, pool, depth - 1));
  }
  case 3: {
    Term l = random_term_at(rng, shape, pool, depth - 1);
    return Term::compose(l, random_term_at(rng, shape, pool, depth - 1));
  }
  default: {
    Term l = random_term_at(rng, shape, pool, depth - 1);
    return Term::parallel(l, random_term_at(rng, shape, pool, depth - 1));
  }
  }
}

Counterexample cx_of(std::string property, std::vector<std::string> inputs, std::string expected, std::string actual,
                     std::uint64_t seed, std::uint64_t trial) {
  return {std::move(property), std::move(inputs), std::move(expected), std::move(actual), seed, trial};
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

std::vector<Atom> atom_pool(std::size_t count) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < count; ++i)
    out.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

Term random_term(std::mt19937_64& rng, const TermShape& shape) {
  return random_term_at(rng, shape, atom_pool(shape.atom_count), shape.max_depth);
}

void RunReport::record(const std::string& property, bool ok, const Counterexample& cx) {
  ++checked;
  auto& [c, f] = by_property[property];
  ++c;
  if (!ok) {
    ++failed;
    ++f;
    if (!first_counterexample)
      first_counterexample = cx;
  }
}

std::string RunReport::summary() const {
  std::ostringstream os;
  os << "campaign: " << campaign << "\n";
  for (const auto& [name, counts] : by_property)
    os << "  " << name << ": checked " << counts.first << ", failed " << counts.second << "\n";
  os << "checked: " << checked << "\n";
  os << "failed: " << failed << "\n";
  if (first_counterexample) {
    const auto& cx = *first_counterexample;
    os << "first counterexample (" << cx.property << ", seed " << cx.seed << ", trial " << cx.trial << "):\n";
    for (const auto& in : cx.inputs)
      os << "  input:    " << in << "\n";
    os << "  expected: " << cx.expected << "\n";
    os << "  actual:   " << cx.actual << "\n";
  }
  return os.str();
}

std::string RunReport::json_line() const {
  nlohmann::ordered_json j;
  j["campaign"] = campaign;
  j["checked"] = checked;
  j["failed"] = failed;
  if (first_counterexample) {
    const auto& cx = *first_counterexample;
    j["firstCounterexample"] = {{"property", cx.property}, {"inputs", cx.inputs}, {"expected", cx.expected},
                                {"actual", cx.actual},     {"seed", cx.seed},     {"trial", cx.trial}};
  } else {
    j["firstCounterexample"] = nullptr;
  }
  j["elapsedMs"] = elapsed.count();
  nlohmann::ordered_json props = nlohmann::ordered_json::object();
  for (const auto& [name, counts] : by_property)
    props[name] = {{"checked", counts.first}, {"failed", counts.second}};
  j["byProperty"] = props;
  return j.dump();
}

const std::vector<AxiomSchema>& equational_axioms() {
  static const std::vector<AxiomSchema> schemas = {
      {"G1", "x + x", "x"},
      {"G1", "x & x", "x"},
      {"G2", "x + y", "y + x"},
      {"G2", "x & y", "y & x"},
      {"G3", "x + (y + z)", "(x + y) + z"},
      {"G3", "x & (y & z)", "(x & y) & z"},
      {"G4", "x + (x & y)", "x"},
      {"G4", "x & (x + y)", "x"},
      {"G5", "x + (y & z)", "(x + y) & (x + z)"},
      {"G5", "x & (y + z)", "(x & y) + (x & z)"},
      {"G6", "x^d^d", "x"},
      {"G7", "(x + y)^d", "x^d & y^d"},
      {"G7", "(x & y)^d", "x^d + y^d"},
      {"G8", "(x ; y) ; z", "x ; (y ; z)"},
      {"G9", "(x + y) ; z", "(x ; z) + (y ; z)"},
      {"G9", "(x & y) ; z", "(x ; z) & (y ; z)"},
      {"G10", "x^d ; y^d", "(x ; y)^d"},
      {"G12", "x ; 1", "x"},
      {"G12", "1 ; x", "x"},
      {"G13", "1^d", "1"},
      {"CG1", "(x || y) || z", "x || (y || z)"},
      {"CG2", "ga || (gb ; y)", "(ga || gb) ; y"},
      {"CG3", "(ga ; x) || gb", "(ga || gb) ; x"},
      {"CG4", "(ga ; x) || (gb ; y)", "(ga || gb) ; (x || y)"},
      {"CG5", "(x + y) || z", "(x || z) + (y || z)"},
      {"CG6", "x || (y + z)", "(x || y) + (x || z)"},
      {"CG7", "(x & y) || z", "(x || z) & (y || z)"},
      {"CG8", "x || (y & z)", "(x || y) & (x || z)"},
      {"CG9", "(x || y)^d", "x^d || y^d"},
      {"CG10", "1 || x", "x"},
      {"CG11", "x || 1", "x"},
  };
  return schemas;
}

Term instantiate(const Term& pattern, const std::map<std::string, Term>& binding) {
  switch (pattern.kind()) {
  case TermKind::Idle:
    return pattern;
  case TermKind::Atom: {
    auto it = binding.find(pattern.atom_name().name());
    return it == binding.end() ? pattern : it->second;
  }
  case TermKind::Dual:
    return Term::dual(instantiate(pattern.inner(), binding));
  default:
    return Term::binary(pattern.kind(), instantiate(pattern.left(), binding), instantiate(pattern.right(), binding));
  }
}

namespace {

std::map<std::string, Term> random_binding(std::mt19937_64& rng, const TermShape& shape) {
  const auto pool = atom_pool(shape.atom_count);
  std::map<std::string, Term> b;
  for (const char* v : {"x", "y", "z"})
    b.emplace(v, random_term(rng, shape));
  for (const char* v : {"ga", "gb"})
    b.emplace(v, Term::atom(pool[draw(rng, pool.size())]));
  return b;
}

std::string join_names(const std::map<std::string, Term>& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty())
      out += ", ";
    out += k + " := " + print_term(v);
  }
  return out;
}

template <typename F>
RunReport timed(std::string campaign, F body) {
  RunReport r;
  r.campaign = std::move(campaign);
  auto start = std::chrono::steady_clock::now();
  body(r);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

} // namespace

RunReport fuzz_axioms(const FuzzConfig& config) {
  return timed("check-axioms", [&](RunReport& report) {
    const TermShape shape{config.max_depth, config.atom_count, true};
    const auto& schemas = equational_axioms();
    for (std::size_t s = 0; s < schemas.size(); ++s) {
      const Term lhs = parse_term(schemas[s].lhs);
      const Term rhs = parse_term(schemas[s].rhs);
      for (std::size_t t = 0; t < config.trials; ++t) {
        auto rng = trial_rng(config.seed + s * 0x100000001b3ULL, t);
        auto binding = random_binding(rng, shape);
        Term l = instantiate(lhs, binding);
        Term r = instantiate(rhs, binding);
        CanonicalTerm nl = normalize(l);
        CanonicalTerm nr = normalize(r);
        bool ok = nl == nr;
        report.record(schemas[s].name, ok,
                      ok ? Counterexample{}
                         : cx_of(schemas[s].name,
                                 {schemas[s].lhs + " = " + schemas[s].rhs, join_names(binding)},
                                 print_canonical(nl), print_canonical(nr), config.seed, t));
      }
    }
  });
}

namespace {

/// Random context with one hole, filled by `fill`.
Term plug(std::mt19937_64& rng, const TermShape& shape, const Term& fill, std::size_t depth) {
  if (depth <= 1 || draw(rng, 3) == 0)
    return fill;
  Term other = random_term(rng, TermShape{depth - 1, shape.atom_count, false});
  Term inner = plug(rng, shape, fill, depth - 1);
  bool left = draw(rng, 2) == 0;
  switch (draw(rng, 4)) {
  case 0:
    return Term::dual(inner);
  case 1:
    return left ? Term::choice1(inner, other) : Term::choice1(other, inner);
  case 2:
    return left ? Term::choice2(inner, other) : Term::choice2(other, inner);
  default:
    return left ? Term::compose(inner, other) : Term::compose(other, inner);
  }
}

bool included_both(const RelationPair& a, const RelationPair& b) {
  return a.first.subset_of(b.first) && a.second.subset_of(b.second);
}

} // namespace

RunReport fuzz_soundness(const FuzzConfig& config) { return fuzz_soundness(config, &normalize); }

RunReport fuzz_soundness(const FuzzConfig& config, NormalizeFn normal_form) {
  return timed("fuzz-soundness", [&](RunReport& report) {
    const TermShape shape{config.max_depth, config.atom_count, false};
    const auto pool = atom_pool(config.atom_count);
    const std::set<Atom> atoms(pool.begin(), pool.end());
    const auto& schemas = equational_axioms();
    std::vector<std::pair<Term, Term>> sequential;
    for (const auto& s : schemas)
      if (s.name.rfind("CG", 0) != 0)
        sequential.emplace_back(parse_term(s.lhs), parse_term(s.rhs));

    for (std::size_t t = 0; t < config.trials; ++t) {
      auto rng = trial_rng(config.seed, t);
      std::vector<GameBoard> boards;
      for (std::size_t k = 0; k < config.boards_per_trial; ++k)
        boards.push_back(sample_board(config.board_states, atoms, {}, rng()));

      // (i) the normal form and its source agree on every board
      Term term = random_term(rng, shape);
      CanonicalTerm nf = normal_form(term);
      Term printed = to_term(nf);
      bool shape_ok = is_minimal_canonical(nf) && parallel_only_on_literals(printed) && normal_form(printed) == nf;
      report.record("normal-form-shape", shape_ok,
                    cx_of("normal-form-shape", {print_term(term)}, "minimal canonical fixpoint", print_canonical(nf),
                          config.seed, t));
      if (!boards.empty()) {
        CompiledTerm src(term), dst(printed);
        for (const auto& b : boards) {
          bool ok = src.run(b) == dst.run(b);
          report.record("normal-form-agrees", ok,
                        cx_of("normal-form-agrees", {print_term(term), save_board(b)}, "equal outcome relations",
                              print_canonical(nf), config.seed, t));
        }
      }

      // (ii) composition is monotone in its second argument
      Term x = random_term(rng, shape), y = random_term(rng, shape), z = random_term(rng, shape);
      if (!boards.empty()) {
        CompiledTerm by(y), bz(z), bxy(Term::compose(x, y)), bxz(Term::compose(x, z));
        for (const auto& b : boards) {
          if (!included_both(by.run(b), bz.run(b)))
            continue;
          bool ok = included_both(bxy.run(b), bxz.run(b));
          report.record("G11", ok,
                        cx_of("G11", {print_term(x), print_term(y), print_term(z), save_board(b)},
                              "x;y included in x;z", "not included", config.seed, t));
        }
      }

      // (iii) a sequential axiom instance inside a random context
      const auto& [lhs, rhs] = sequential[draw(rng, sequential.size())];
      auto binding = random_binding(rng, TermShape{std::max<std::size_t>(1, config.max_depth - 1), config.atom_count,
                                                   false});
      Term hole = Term::atom("hole");
      Term ctx = plug(rng, shape, hole, config.max_depth);
      Term p = instantiate(ctx, {{"hole", instantiate(lhs, binding)}});
      Term q = instantiate(ctx, {{"hole", instantiate(rhs, binding)}});
      CanonicalTerm np = normal_form(p), nq = normal_form(q);
      EquivalenceVerdict verdict{isomorphic(np, nq), np, nq};
      report.record("equivalent-pair-decided", verdict.equivalent,
                    cx_of("equivalent-pair-decided", {print_term(p), print_term(q)}, print_canonical(verdict.nf1),
                          print_canonical(verdict.nf2), config.seed, t));
      if (verdict.equivalent && !boards.empty()) {
        CompiledTerm bp(p), bq(q);
        for (const auto& b : boards) {
          bool ok = bp.run(b) == bq.run(b);
          report.record("equivalent-pair-agrees", ok,
                        cx_of("equivalent-pair-agrees", {print_term(p), print_term(q), save_board(b)},
                              "equal outcome relations", "boards disagree", config.seed, t));
        }
      }
    }
  });
}

std::vector<CgSemanticsRow> cg_semantics_report(const FuzzConfig& config) {
  const TermShape shape{config.max_depth, config.atom_count, true};
  const auto pool = atom_pool(config.atom_count);
  const std::set<Atom> atoms(pool.begin(), pool.end());
  std::vector<CgSemanticsRow> rows;
  const auto& schemas = equational_axioms();
  for (std::size_t s = 0; s < schemas.size(); ++s) {
    if (schemas[s].name.rfind("CG", 0) != 0)
      continue;
    CgSemanticsRow row{schemas[s].name, 0, 0};
    const Term lhs = parse_term(schemas[s].lhs);
    const Term rhs = parse_term(schemas[s].rhs);
    for (std::size_t t = 0; t < config.trials; ++t) {
      auto rng = trial_rng(config.seed + s * 0x100000001b3ULL, t);
      auto binding = random_binding(rng, shape);
      CompiledTerm l(instantiate(lhs, binding), CompiledTerm::ParallelMode::Product);
      CompiledTerm r(instantiate(rhs, binding), CompiledTerm::ParallelMode::Product);
      bool held = true;
      for (std::size_t k = 0; k < config.boards_per_trial && held; ++k) {
        GameBoard b = sample_board(config.board_states, atoms, {}, rng());
        held = l.run(b) == r.run(b);
      }
      ++row.checked;
      if (held)
        ++row.held;
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace acg
