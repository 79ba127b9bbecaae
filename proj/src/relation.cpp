#include "acg/relation.hpp"

#include "acg/term.hpp"

namespace acg {

namespace family {

namespace {

// Subset indices that do not contain element i.
Family without_element(std::size_t i, std::size_t n) {
  Family m = 0;
  for (StateSet x = 0; x < (StateSet{1} << n); ++x)
    if (!(x & (StateSet{1} << i)))
      m |= Family{1} << x;
  return m;
}

} // namespace

Family universe(std::size_t n) {
  std::size_t subsets = std::size_t{1} << n;
  return subsets >= 64 ? ~Family{0} : (Family{1} << subsets) - 1;
}

Family upward_closure(Family f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    f |= (f & without_element(i, n)) << (std::size_t{1} << i);
  return f;
}

bool is_upward_closed(Family f, std::size_t n) { return upward_closure(f, n) == f; }

std::vector<StateSet> minimal_sets(Family f, std::size_t n) {
  std::vector<StateSet> out;
  for (StateSet x = 0; x < (StateSet{1} << n); ++x) {
    if (!contains(f, x))
      continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((x & (StateSet{1} << i)) && contains(f, x & ~(StateSet{1} << i)))
        minimal = false;
    if (minimal)
      out.push_back(x);
  }
  return out;
}

Family complement_sets(Family f, std::size_t n) {
  StateSet all = (StateSet{1} << n) - 1;
  Family out = 0;
  for (StateSet x = 0; x <= all; ++x)
    if (contains(f, x))
      out |= Family{1} << (all & ~x);
  return out;
}

std::vector<Family> all_upward_closed(std::size_t n) {
  if (n > 3)
    throw Error("all_upward_closed: more than 3 states");
  std::vector<Family> out;
  Family limit = Family{1} << (std::size_t{1} << n);
  for (Family f = 0; f < limit; ++f)
    if (is_upward_closed(f, n))
      out.push_back(f);
  return out;
}

} // namespace family

OutcomeRelation OutcomeRelation::identity(std::size_t states) {
  OutcomeRelation r(states);
  for (std::size_t s = 0; s < states; ++s) {
    Family f = 0;
    for (StateSet x = 0; x < (StateSet{1} << states); ++x)
      if (x & (StateSet{1} << s))
        f |= Family{1} << x;
    r.fam_[s] = f;
  }
  return r;
}

OutcomeRelation OutcomeRelation::monotone_close(std::size_t states,
                                                const std::vector<std::pair<std::size_t, StateSet>>& generators) {
  if (states > kMaxStates)
    throw Error("outcome relation: too many states");
  OutcomeRelation r(states);
  for (auto [s, x] : generators) {
    if (s >= states || x >= (StateSet{1} << states))
      throw Error("outcome relation: unknown state in generator");
    r.fam_[s] |= Family{1} << x;
  }
  for (std::size_t s = 0; s < states; ++s)
    r.fam_[s] = family::upward_closure(r.fam_[s], states);
  return r;
}

bool OutcomeRelation::empty() const {
  for (std::size_t s = 0; s < n_; ++s)
    if (fam_[s])
      return false;
  return true;
}

bool OutcomeRelation::is_upward_closed() const {
  for (std::size_t s = 0; s < n_; ++s)
    if (!family::is_upward_closed(fam_[s], n_))
      return false;
  return true;
}

std::vector<std::pair<std::size_t, StateSet>> OutcomeRelation::generators() const {
  std::vector<std::pair<std::size_t, StateSet>> out;
  for (std::size_t s = 0; s < n_; ++s)
    for (StateSet x : family::minimal_sets(fam_[s], n_))
      out.emplace_back(s, x);
  return out;
}

OutcomeRelation OutcomeRelation::unite(const OutcomeRelation& o) const {
  OutcomeRelation r(n_);
  for (std::size_t s = 0; s < n_; ++s)
    r.fam_[s] = fam_[s] | o.fam_[s];
  return r;
}

OutcomeRelation OutcomeRelation::intersect(const OutcomeRelation& o) const {
  OutcomeRelation r(n_);
  for (std::size_t s = 0; s < n_; ++s)
    r.fam_[s] = fam_[s] & o.fam_[s];
  return r;
}

OutcomeRelation OutcomeRelation::then(const OutcomeRelation& next) const {
  OutcomeRelation r(n_);
  const StateSet subsets = StateSet{1} << n_;
  for (StateSet x = 0; x < subsets; ++x) {
    StateSet reach = 0;
    for (std::size_t t = 0; t < n_; ++t)
      reach |= static_cast<StateSet>((next.fam_[t] >> x) & 1U) << t;
    for (std::size_t s = 0; s < n_; ++s)
      r.fam_[s] |= ((fam_[s] >> reach) & 1U) << x;
  }
  return r;
}

OutcomeRelation OutcomeRelation::intersection_product(const OutcomeRelation& o) const {
  OutcomeRelation r(n_);
  const StateSet subsets = StateSet{1} << n_;
  for (std::size_t s = 0; s < n_; ++s) {
    Family meets = 0;
    for (StateSet y1 = 0; y1 < subsets; ++y1) {
      if (!family::contains(fam_[s], y1))
        continue;
      for (StateSet y2 = 0; y2 < subsets; ++y2)
        if (family::contains(o.fam_[s], y2))
          meets |= Family{1} << (y1 & y2);
    }
    r.fam_[s] = family::upward_closure(meets, n_);
  }
  return r;
}

bool OutcomeRelation::subset_of(const OutcomeRelation& o) const {
  for (std::size_t s = 0; s < n_; ++s)
    if (fam_[s] & ~o.fam_[s])
      return false;
  return true;
}

bool operator==(const OutcomeRelation& a, const OutcomeRelation& b) {
  if (a.n_ != b.n_)
    return false;
  for (std::size_t s = 0; s < a.n_; ++s)
    if (a.fam_[s] != b.fam_[s])
      return false;
  return true;
}

bool satisfies_con(const RelationPair& r) {
  std::size_t n = r.first.state_count();
  for (std::size_t s = 0; s < n; ++s)
    if (r.first.at(s) & family::complement_sets(r.second.at(s), n))
      return false;
  return true;
}

bool satisfies_fin(const RelationPair& r) {
  std::size_t n = r.first.state_count();
  StateSet all = (StateSet{1} << n) - 1;
  for (std::size_t s = 0; s < n; ++s)
    if (!r.first.holds(s, all) || !r.second.holds(s, all))
      return false;
  return true;
}

bool satisfies_det(const RelationPair& r) {
  std::size_t n = r.first.state_count();
  Family all = family::universe(n);
  for (std::size_t s = 0; s < n; ++s)
    if (family::complement_sets(r.second.at(s), n) != (all & ~r.first.at(s)))
      return false;
  return true;
}

} // namespace acg
