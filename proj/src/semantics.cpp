#include "argcsp/semantics.hpp"

#include <array>
#include <vector>

namespace argcsp {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "conflict-free", "admissible", "complete", "stable", "preferred", "grounded", "semi-stable", "stage", "ideal"};

bool attacked_by(const Framework& f, const Extension& b, ArgumentId x) {
  for (ArgumentId y : f.attackers(x)) {
    if (b.contains(y)) return true;
  }
  return false;
}

// Pairwise inclusion filter, kept separate from the encodings module so the
// oracle stays independent of it.
std::vector<Extension> extremal(const std::vector<Extension>& items, const std::vector<Extension>& keys, bool maximal) {
  std::vector<Extension> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < items.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = maximal ? keys[i].is_strict_subset_of(keys[j]) : keys[j].is_strict_subset_of(keys[i]);
    }
    if (!dominated) out.push_back(items[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(SemanticsKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<SemanticsKind> parse_semantics_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<SemanticsKind>(i);
  }
  return std::nullopt;
}

bool is_base_kind(SemanticsKind kind) {
  return kind == SemanticsKind::ConflictFree || kind == SemanticsKind::Admissible ||
         kind == SemanticsKind::Complete || kind == SemanticsKind::Stable;
}

void validate(const Framework& f, const SemanticsSpec& spec) {
  if (spec.is_weighted() != f.is_weighted()) {
    throw SemanticsError(spec.is_weighted() ? "weighted semantics need a weighted framework"
                                            : "classical semantics need an unweighted framework");
  }
  if (spec.is_weighted() && !f.semiring().accepts(*spec.threshold)) {
    throw SemanticsError("threshold " + spec.threshold->to_string() + " is not a " + f.semiring().name() + " value");
  }
}

bool defends(const Framework& f, const Extension& b, ArgumentId x, const SemanticsSpec& spec) {
  if (!spec.is_weighted()) {
    for (ArgumentId y : f.attackers(x)) {
      if (!attacked_by(f, b, y)) return false;
    }
    return true;
  }
  const auto& s = f.semiring();
  for (ArgumentId y : f.attackers(x)) {
    if (spec.defense_scope == DefenseScope::OutsideAttackers && b.contains(y)) continue;
    if (!s.lt(set_attack_weight(f, b, y), f.weight(y, x))) return false;
  }
  return true;
}

bool is_conflict_free(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  if (!spec.is_weighted()) {
    for (const auto& at : f.attacks()) {
      if (b.contains(at.attacker) && b.contains(at.target)) return false;
    }
    return true;
  }
  return f.semiring().leq(*spec.threshold, set_attack_weight(f, b, b));
}

bool is_admissible(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  if (!is_conflict_free(f, b, spec)) return false;
  for (ArgumentId x : b.members()) {
    if (!defends(f, b, x, spec)) return false;
  }
  return true;
}

bool is_complete(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  if (!is_admissible(f, b, spec)) return false;
  for (ArgumentId x = 0; x < f.size(); ++x) {
    if (b.contains(x) || !defends(f, b, x, spec)) continue;
    if (!spec.is_weighted() || is_conflict_free(f, b.with(x), spec)) return false;
  }
  return true;
}

bool is_stable(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  if (!is_conflict_free(f, b, spec)) return false;
  for (ArgumentId c = 0; c < f.size(); ++c) {
    if (b.contains(c)) continue;
    if (!spec.is_weighted()) {
      if (!attacked_by(f, b, c)) return false;
      continue;
    }
    const auto& s = f.semiring();
    const SemiringValue& bound = spec.stable_rule == StableRule::Strict ? *spec.threshold : s.top();
    if (!s.lt(set_attack_weight(f, b, c), bound)) return false;
  }
  return true;
}

Extension semantic_range(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  return spec.is_weighted() ? alpha_range(f, b, *spec.threshold) : range(f, b);
}

bool check(const Framework& f, const Extension& b, const SemanticsSpec& spec) {
  validate(f, spec);
  if (b.universe() != f.size()) throw SemanticsError("extension universe does not match the framework");
  switch (spec.kind) {
    case SemanticsKind::ConflictFree: return is_conflict_free(f, b, spec);
    case SemanticsKind::Admissible: return is_admissible(f, b, spec);
    case SemanticsKind::Complete: return is_complete(f, b, spec);
    case SemanticsKind::Stable: return is_stable(f, b, spec);
    default: return enumerate_bruteforce(f, spec).contains(b);
  }
}

ExtensionSet enumerate_bruteforce(const Framework& f, const SemanticsSpec& spec, std::size_t cap) {
  validate(f, spec);
  const std::size_t n = f.size();
  if (n > cap || n > 30) throw SemanticsError("brute-force enumeration capped at " + std::to_string(cap) + " arguments");

  auto scan = [&](SemanticsKind base) {
    std::vector<Extension> out;
    const auto base_spec = spec.with_kind(base);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Extension b = Extension::from_mask(n, mask);
      bool ok = false;
      switch (base) {
        case SemanticsKind::ConflictFree: ok = is_conflict_free(f, b, base_spec); break;
        case SemanticsKind::Admissible: ok = is_admissible(f, b, base_spec); break;
        case SemanticsKind::Complete: ok = is_complete(f, b, base_spec); break;
        case SemanticsKind::Stable: ok = is_stable(f, b, base_spec); break;
        default: break;
      }
      if (ok) out.push_back(std::move(b));
    }
    return out;
  };
  auto ranges = [&](const std::vector<Extension>& items) {
    std::vector<Extension> keys;
    for (const auto& e : items) keys.push_back(semantic_range(f, e, spec));
    return keys;
  };

  std::vector<Extension> result;
  switch (spec.kind) {
    case SemanticsKind::ConflictFree:
    case SemanticsKind::Admissible:
    case SemanticsKind::Complete:
    case SemanticsKind::Stable: result = scan(spec.kind); break;
    case SemanticsKind::Preferred: {
      auto adm = scan(SemanticsKind::Admissible);
      result = extremal(adm, adm, true);
      break;
    }
    case SemanticsKind::Grounded: {
      auto comp = scan(SemanticsKind::Complete);
      result = extremal(comp, comp, false);
      break;
    }
    case SemanticsKind::SemiStable: {
      auto comp = scan(SemanticsKind::Complete);
      result = extremal(comp, ranges(comp), true);
      break;
    }
    case SemanticsKind::Stage: {
      auto cf = scan(SemanticsKind::ConflictFree);
      result = extremal(cf, ranges(cf), true);
      break;
    }
    case SemanticsKind::Ideal: {
      auto adm = scan(SemanticsKind::Admissible);
      auto pref = extremal(adm, adm, true);
      Extension common = Extension::full(n);
      for (const auto& p : pref) common &= p;
      std::vector<Extension> inside;
      for (const auto& a : adm) {
        if (a.is_subset_of(common)) inside.push_back(a);
      }
      result = extremal(inside, inside, true);
      break;
    }
  }
  ExtensionSet out;
  for (auto& e : result) out.insert(std::move(e));
  return out;
}

Extension grounded_fixpoint(const Framework& f) {
  const auto spec = SemanticsSpec::classical(SemanticsKind::Complete);
  const Framework plain = f.is_weighted() ? f.unweighted() : f;
  Extension current(plain.size());
  while (true) {
    Extension next(plain.size());
    for (ArgumentId x = 0; x < plain.size(); ++x) {
      if (defends(plain, current, x, spec)) next.insert(x);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace argcsp
