#include "argcsp/encodings.hpp"

#include <algorithm>
#include <string>

namespace argcsp {

namespace {

std::vector<Literal> dedup(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

// For every maximal T ⊆ att(p) whose combined counter-attack on p does not
// beat W(p,x), returns att(p) \ T. B answers p exactly when it meets each of
// the returned sets.
std::vector<std::vector<ArgumentId>> uncovering_sets(const Framework& f, ArgumentId p, ArgumentId x) {
  const auto& s = f.semiring();
  const auto g = f.attackers(p);
  const std::size_t k = g.size();
  if (k > kMaxWeightedInDegree) {
    throw EncodingError("argument " + f.name(p) + " has " + std::to_string(k) +
                        " attackers; weighted defense is limited to " + std::to_string(kMaxWeightedInDegree));
  }
  const SemiringValue wpx = f.weight(p, x);
  std::vector<SemiringValue> w;
  w.reserve(k);
  for (ArgumentId a : g) w.push_back(f.weight(a, p));

  const std::uint32_t full = (std::uint32_t{1} << k);
  std::vector<bool> failing(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    SemiringValue acc = s.top();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) acc = s.times(acc, w[i]);
    }
    failing[mask] = !s.lt(acc, wpx);
  }
  std::vector<std::vector<ArgumentId>> out;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!failing[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < k && maximal; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if (!(mask & bit) && failing[mask | bit]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<ArgumentId> rest;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) rest.push_back(g[i]);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

void add_classical_cf(Model& m, const Framework& f) {
  for (const auto& at : f.attacks()) m.add_nogood({pos(at.attacker), pos(at.target)});
}

void add_classical_adm(Model& m, const Framework& f) {
  for (ArgumentId x = 0; x < f.size(); ++x) {
    for (ArgumentId p : f.attackers(x)) {
      std::vector<Literal> lits{pos(x)};
      for (ArgumentId g : f.attackers(p)) lits.push_back(neg(g));
      m.add_nogood(std::move(lits));
    }
  }
}

void add_classical_comp(Model& m, const Framework& f) {
  for (ArgumentId x = 0; x < f.size(); ++x) {
    Cnf guard;
    bool possible = true;
    for (ArgumentId p : f.attackers(x)) {
      Clause c;
      for (ArgumentId g : f.attackers(p)) c.push_back(pos(g));
      if (c.empty()) {
        possible = false;
        break;
      }
      guard.push_back(std::move(c));
    }
    if (possible) m.add_requirement({std::move(guard), {{pos(x)}}});
  }
}

void add_classical_stab(Model& m, const Framework& f) {
  for (ArgumentId x = 0; x < f.size(); ++x) {
    std::vector<Literal> lits{neg(x)};
    for (ArgumentId p : f.attackers(x)) lits.push_back(neg(p));
    m.add_nogood(std::move(lits));
  }
}

void add_weighted_cf(Model& m, const Framework& f) {
  auto attacks = f.attacks();
  auto weights = f.weights();
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    m.add_cost_term({dedup({pos(attacks[i].attacker), pos(attacks[i].target)}), weights[i]});
  }
}

void add_weighted_adm(Model& m, const Framework& f, DefenseScope scope) {
  for (ArgumentId x = 0; x < f.size(); ++x) {
    for (ArgumentId p : f.attackers(x)) {
      if (scope == DefenseScope::OutsideAttackers && p == x) continue;
      for (const auto& rest : uncovering_sets(f, p, x)) {
        std::vector<Literal> lits{pos(x)};
        if (scope == DefenseScope::OutsideAttackers) lits.push_back(neg(p));
        for (ArgumentId g : rest) lits.push_back(neg(g));
        m.add_nogood(std::move(lits));
      }
    }
  }
}

// An outsider x that B defends must push B over budget once added.
void add_weighted_comp(Model& m, const Framework& f, const SemiringValue& alpha, DefenseScope scope) {
  auto attacks = f.attacks();
  auto weights = f.weights();
  for (ArgumentId x = 0; x < f.size(); ++x) {
    Cnf guard{{neg(x)}};
    bool possible = true;
    for (ArgumentId p : f.attackers(x)) {
      for (const auto& rest : uncovering_sets(f, p, x)) {
        Clause c;
        if (scope == DefenseScope::OutsideAttackers) c.push_back(pos(p));
        for (ArgumentId g : rest) c.push_back(pos(g));
        if (c.empty()) possible = false;
        guard.push_back(std::move(c));
      }
    }
    if (!possible) continue;
    std::vector<CostTerm> terms;
    for (std::size_t i = 0; i < attacks.size(); ++i) {
      std::vector<Literal> trigger;
      if (attacks[i].attacker != x) trigger.push_back(pos(attacks[i].attacker));
      if (attacks[i].target != x) trigger.push_back(pos(attacks[i].target));
      terms.push_back({dedup(std::move(trigger)), weights[i]});
    }
    m.add_threshold_requirement({std::move(guard), std::move(terms), alpha, BudgetRelation::NotWithin});
  }
}

void add_weighted_strict_stab(Model& m, const Framework& f, const SemiringValue& alpha) {
  for (ArgumentId c = 0; c < f.size(); ++c) {
    std::vector<CostTerm> terms;
    for (ArgumentId p : f.attackers(c)) terms.push_back({{pos(p)}, f.weight(p, c)});
    m.add_threshold_requirement({{{neg(c)}}, std::move(terms), alpha, BudgetRelation::Below});
  }
}

bool base_check(const Framework& f, const Extension& e, const SemanticsSpec& spec) {
  switch (spec.kind) {
    case SemanticsKind::ConflictFree: return is_conflict_free(f, e, spec);
    case SemanticsKind::Admissible: return is_admissible(f, e, spec);
    case SemanticsKind::Complete: return is_complete(f, e, spec);
    case SemanticsKind::Stable: return is_stable(f, e, spec);
    default: return false;
  }
}

SemanticsKind base_of(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::Preferred:
    case SemanticsKind::Ideal: return SemanticsKind::Admissible;
    case SemanticsKind::Grounded:
    case SemanticsKind::SemiStable: return SemanticsKind::Complete;
    case SemanticsKind::Stage: return SemanticsKind::ConflictFree;
    default: return kind;
  }
}

}  // namespace

Model encode(const Framework& f, const SemanticsSpec& spec) {
  validate(f, spec);
  if (!is_base_kind(spec.kind)) {
    throw EncodingError(std::string(to_string(spec.kind)) + " has no direct encoding");
  }
  const auto kind = spec.kind;
  if (!spec.is_weighted()) {
    Model m(f.size());
    add_classical_cf(m, f);
    if (kind == SemanticsKind::Admissible || kind == SemanticsKind::Complete) add_classical_adm(m, f);
    if (kind == SemanticsKind::Complete) add_classical_comp(m, f);
    if (kind == SemanticsKind::Stable) add_classical_stab(m, f);
    return m;
  }
  Model m(f.size(), f.semiring());
  m.set_threshold(*spec.threshold);
  add_weighted_cf(m, f);
  if (kind == SemanticsKind::Admissible || kind == SemanticsKind::Complete) add_weighted_adm(m, f, spec.defense_scope);
  if (kind == SemanticsKind::Complete) add_weighted_comp(m, f, *spec.threshold, spec.defense_scope);
  if (kind == SemanticsKind::Stable) {
    add_classical_stab(m, f);
    if (spec.stable_rule == StableRule::Strict) add_weighted_strict_stab(m, f, *spec.threshold);
  }
  return m;
}

Model apply_user_requirements(Model m, const std::vector<UserRequirement>& reqs) {
  for (const auto& r : reqs) {
    try {
      m.add_requirement({r.guard, r.consequence});
    } catch (const std::out_of_range& e) {
      throw EncodingError(std::string("requirement mentions an unknown argument: ") + e.what());
    }
  }
  return m;
}

ExtensionSet filter_extremal(const ExtensionSet& sets, Direction dir, ExtremalKey key, const Framework* f,
                             const SemanticsSpec* spec) {
  if (key == ExtremalKey::Range && (f == nullptr || spec == nullptr)) {
    throw EncodingError("range filtering needs a framework and a semantics");
  }
  std::vector<const Extension*> items;
  std::vector<Extension> keys;
  for (const auto& e : sets) {
    items.push_back(&e);
    keys.push_back(key == ExtremalKey::Range ? semantic_range(*f, e, *spec) : e);
  }
  std::vector<std::size_t> counts;
  for (const auto& k : keys) counts.push_back(k.count());

  ExtensionSet out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < items.size() && !dominated; ++j) {
      if (dir == Direction::Max) {
        dominated = counts[j] > counts[i] && keys[i].is_subset_of(keys[j]);
      } else {
        dominated = counts[j] < counts[i] && keys[j].is_subset_of(keys[i]);
      }
    }
    if (!dominated) out.insert(*items[i]);
  }
  return out;
}

EnumerateOutcome enumerate(const EncodingRequest& req) {
  const Framework& f = req.framework;
  const SemanticsSpec& spec = req.spec;
  validate(f, spec);
  const SemanticsSpec base = spec.with_kind(base_of(spec.kind));
  const bool extremal = !is_base_kind(spec.kind);

  SearchConfig cfg = req.search;
  if (extremal) cfg.solution_cap.reset();
  Model m = apply_user_requirements(encode(f, base), req.requirements);
  SolveOutcome raw = spec.is_weighted() ? solve_within_budget(m, cfg) : solve_all(m, cfg);

  EnumerateOutcome result;
  ExtensionSet candidates;
  for (const auto& e : raw.solutions) {
    if (req.leaf_validation && !base_check(f, e, base)) {
      ++result.rejected;
      continue;
    }
    candidates.insert(e);
  }

  ExtensionSet final_set;
  switch (spec.kind) {
    case SemanticsKind::Preferred: final_set = filter_extremal(candidates, Direction::Max); break;
    case SemanticsKind::Grounded: final_set = filter_extremal(candidates, Direction::Min); break;
    case SemanticsKind::SemiStable:
    case SemanticsKind::Stage:
      final_set = filter_extremal(candidates, Direction::Max, ExtremalKey::Range, &f, &spec);
      break;
    case SemanticsKind::Ideal: {
      ExtensionSet pref = filter_extremal(candidates, Direction::Max);
      Extension common = Extension::full(f.size());
      for (const auto& p : pref) common &= p;
      ExtensionSet inside;
      for (const auto& a : candidates) {
        if (a.is_subset_of(common)) inside.insert(a);
      }
      final_set = filter_extremal(inside, Direction::Max);
      break;
    }
    default: final_set = std::move(candidates); break;
  }

  result.outcome = std::move(raw);
  if (extremal && req.search.solution_cap && final_set.size() > *req.search.solution_cap) {
    ExtensionSet kept;
    for (const auto& e : final_set) {
      if (kept.size() == *req.search.solution_cap) break;
      kept.insert(e);
    }
    final_set = std::move(kept);
    result.outcome.complete = false;
  }
  result.outcome.solutions = std::move(final_set);
  return result;
}

bool is_preferred(const Framework& f, const Extension& t, const SearchConfig& cfg) {
  if (f.is_weighted()) throw EncodingError("the preferred check works on unweighted frameworks");
  if (t.universe() != f.size()) throw EncodingError("set does not match the framework");
  Model m = encode(f, SemanticsSpec::classical(SemanticsKind::Admissible));
  for (const auto& ng : m.nogoods()) {
    if (holds_all(ng.literals, t)) return false;
  }
  Clause grow;
  for (ArgumentId a = 0; a < f.size(); ++a) {
    if (t.contains(a)) {
      m.add_nogood({neg(a)});
    } else {
      grow.push_back(pos(a));
    }
  }
  m.add_requirement({{}, {std::move(grow)}});
  SearchConfig one = cfg;
  one.solution_cap = 1;
  SolveOutcome out = solve_all(m, one);
  if (!out.solutions.empty()) return false;
  if (!out.complete) throw SearchTimeout("preferred check timed out");
  return true;
}

}  // namespace argcsp
