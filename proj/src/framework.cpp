#include "argcsp/framework.hpp"

#include <algorithm>
#include <unordered_set>

namespace argcsp {

Framework::Framework(std::size_t n, std::vector<Attack> attacks, std::vector<std::string> names)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  if (names_.empty()) {
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != n) throw FrameworkError("expected " + std::to_string(n) + " argument names");
  std::unordered_set<std::string> seen;
  for (const auto& nm : names_) {
    if (nm.empty()) throw FrameworkError("empty argument name");
    if (!seen.insert(nm).second) throw FrameworkError("duplicate argument name: " + nm);
  }
  for (const auto& at : attacks_) {
    if (at.attacker >= n || at.target >= n) {
      throw FrameworkError("attack endpoint out of range: (" + std::to_string(at.attacker) + "," +
                           std::to_string(at.target) + ")");
    }
  }
  std::sort(attacks_.begin(), attacks_.end());
  if (std::adjacent_find(attacks_.begin(), attacks_.end()) != attacks_.end()) {
    throw FrameworkError("duplicate attack");
  }
  index();
}

Framework Framework::weighted(std::size_t n, std::vector<Attack> attacks, std::vector<SemiringValue> weights,
                              SemiringInstance semiring, std::vector<std::string> names) {
  if (weights.size() != attacks.size()) throw FrameworkError("every attack needs exactly one weight");
  std::vector<std::pair<Attack, SemiringValue>> paired;
  paired.reserve(attacks.size());
  for (std::size_t i = 0; i < attacks.size(); ++i) paired.emplace_back(attacks[i], std::move(weights[i]));
  std::stable_sort(paired.begin(), paired.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  Framework f(n, std::move(attacks), std::move(names));
  for (auto& [at, w] : paired) {
    if (!semiring.accepts(w)) throw FrameworkError("weight " + w.to_string() + " not in the " + semiring.name() + " semiring");
    if (w == semiring.top()) {
      throw FrameworkError("attack (" + f.name(at.attacker) + "," + f.name(at.target) +
                           ") has the top weight, which denotes no attack");
    }
    f.weights_.push_back(std::move(w));
  }
  f.semiring_ = std::move(semiring);
  return f;
}

void Framework::index() {
  attackers_.assign(names_.size(), {});
  targets_.assign(names_.size(), {});
  for (const auto& at : attacks_) {
    attackers_[at.target].push_back(at.attacker);
    targets_[at.attacker].push_back(at.target);
  }
  for (auto& v : attackers_) std::sort(v.begin(), v.end());
}

void Framework::check(ArgumentId a) const {
  if (a >= names_.size()) throw FrameworkError("argument id out of range: " + std::to_string(a));
}

std::optional<std::size_t> Framework::attack_index(ArgumentId attacker, ArgumentId target) const {
  Attack key{attacker, target};
  auto it = std::lower_bound(attacks_.begin(), attacks_.end(), key);
  if (it == attacks_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - attacks_.begin());
}

std::span<const ArgumentId> Framework::attackers(ArgumentId a) const {
  check(a);
  return attackers_[a];
}

std::span<const ArgumentId> Framework::targets(ArgumentId a) const {
  check(a);
  return targets_[a];
}

const SemiringInstance& Framework::semiring() const {
  if (!semiring_) throw FrameworkError("framework is not weighted");
  return *semiring_;
}

SemiringValue Framework::weight(ArgumentId attacker, ArgumentId target) const {
  const auto& s = semiring();
  check(attacker);
  check(target);
  auto idx = attack_index(attacker, target);
  return idx ? weights_[*idx] : s.top();
}

const std::string& Framework::name(ArgumentId a) const {
  check(a);
  return names_[a];
}

std::optional<ArgumentId> Framework::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ArgumentId>(it - names_.begin());
}

Framework Framework::unweighted() const {
  Framework f = *this;
  f.weights_.clear();
  f.semiring_.reset();
  return f;
}

Framework Framework::with_weights(std::vector<SemiringValue> weights, SemiringInstance semiring) const {
  return weighted(size(), attacks_, std::move(weights), std::move(semiring), names_);
}

Framework Framework::without_attacks(const std::vector<bool>& removed) const {
  if (removed.size() != attacks_.size()) throw FrameworkError("removal mask does not match the attack list");
  std::vector<Attack> kept;
  std::vector<SemiringValue> kept_weights;
  for (std::size_t i = 0; i < attacks_.size(); ++i) {
    if (removed[i]) continue;
    kept.push_back(attacks_[i]);
    if (semiring_) kept_weights.push_back(weights_[i]);
  }
  if (semiring_) return weighted(size(), std::move(kept), std::move(kept_weights), *semiring_, names_);
  return Framework(size(), std::move(kept), names_);
}

bool operator==(const Framework& a, const Framework& b) {
  return a.names_ == b.names_ && a.attacks_ == b.attacks_ && a.weights_ == b.weights_ && a.semiring_ == b.semiring_;
}

SemiringValue set_attack_weight(const Framework& f, const Extension& src, ArgumentId dst) {
  const auto& s = f.semiring();
  SemiringValue acc = s.top();
  for (ArgumentId b : f.attackers(dst)) {
    if (src.contains(b)) acc = s.times(acc, f.weight(b, dst));
  }
  return acc;
}

SemiringValue set_attack_weight(const Framework& f, const Extension& src, const Extension& dst) {
  const auto& s = f.semiring();
  SemiringValue acc = s.top();
  auto attacks = f.attacks();
  auto weights = f.weights();
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    if (src.contains(attacks[i].attacker) && dst.contains(attacks[i].target)) acc = s.times(acc, weights[i]);
  }
  return acc;
}

Extension range(const Framework& f, const Extension& b) {
  Extension r = b;
  for (ArgumentId a : b.members()) {
    for (ArgumentId t : f.targets(a)) r.insert(t);
  }
  return r;
}

Extension alpha_range(const Framework& f, const Extension& b, const SemiringValue& alpha) {
  const auto& s = f.semiring();
  s.require(alpha);
  Extension r = b;
  for (ArgumentId c = 0; c < f.size(); ++c) {
    if (s.lt(set_attack_weight(f, b, c), alpha)) r.insert(c);
  }
  return r;
}

std::string format_extension(const Framework& f, const Extension& e) {
  std::string out = "{";
  bool first = true;
  for (ArgumentId a : e.members()) {
    if (!first) out += ',';
    out += f.name(a);
    first = false;
  }
  out += '}';
  return out;
}

Extension parse_extension(const Framework& f, std::string_view text) {
  Extension e(f.size());
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    auto id = f.find(item);
    if (!id) throw FrameworkError("unknown argument: " + std::string(item));
    e.insert(*id);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return e;
}

}  // namespace argcsp
