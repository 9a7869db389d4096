#pragma once

#include "argcsp/extension.hpp"
#include "argcsp/semiring.hpp"

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace argcsp {

class FrameworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Attack {
  ArgumentId attacker = 0;
  ArgumentId target = 0;

  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// An argumentation framework: arguments 0..n-1 and an attack relation,
/// optionally weighted over a semiring. Immutable once built. Attacks are
/// kept in lexicographic (attacker, target) order; weights follow that order.
class Framework {
 public:
  Framework() = default;
  Framework(std::size_t n, std::vector<Attack> attacks, std::vector<std::string> names = {});

  /// Every attack needs a weight, and no weight may be the semiring top (top
  /// stands for "no attack").
  static Framework weighted(std::size_t n, std::vector<Attack> attacks, std::vector<SemiringValue> weights,
                            SemiringInstance semiring, std::vector<std::string> names = {});

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] std::span<const Attack> attacks() const { return attacks_; }
  [[nodiscard]] std::optional<std::size_t> attack_index(ArgumentId attacker, ArgumentId target) const;
  [[nodiscard]] bool attacks(ArgumentId attacker, ArgumentId target) const {
    return attack_index(attacker, target).has_value();
  }

  [[nodiscard]] std::span<const ArgumentId> attackers(ArgumentId a) const;
  [[nodiscard]] std::span<const ArgumentId> targets(ArgumentId a) const;

  [[nodiscard]] bool is_weighted() const { return semiring_.has_value(); }
  [[nodiscard]] const SemiringInstance& semiring() const;
  [[nodiscard]] std::span<const SemiringValue> weights() const { return weights_; }
  /// W(a,b); the semiring top when a does not attack b.
  [[nodiscard]] SemiringValue weight(ArgumentId attacker, ArgumentId target) const;

  [[nodiscard]] const std::string& name(ArgumentId a) const;
  [[nodiscard]] std::span<const std::string> names() const { return names_; }
  [[nodiscard]] std::optional<ArgumentId> find(std::string_view name) const;

  [[nodiscard]] Framework unweighted() const;
  [[nodiscard]] Framework with_weights(std::vector<SemiringValue> weights, SemiringInstance semiring) const;
  /// Copy without the attacks flagged in `removed` (indexed like attacks()).
  [[nodiscard]] Framework without_attacks(const std::vector<bool>& removed) const;

  friend bool operator==(const Framework& a, const Framework& b);

 private:
  void index();
  void check(ArgumentId a) const;

  std::vector<std::string> names_;
  std::vector<Attack> attacks_;
  std::vector<SemiringValue> weights_;
  std::optional<SemiringInstance> semiring_;
  std::vector<std::vector<ArgumentId>> attackers_;
  std::vector<std::vector<ArgumentId>> targets_;
};

/// W(src, dst): combine of W(b,dst) over members b of src attacking dst.
SemiringValue set_attack_weight(const Framework& f, const Extension& src, ArgumentId dst);
/// W(src, dst) over all attacks from src into dst.
SemiringValue set_attack_weight(const Framework& f, const Extension& src, const Extension& dst);

/// B together with every argument some member of B attacks.
Extension range(const Framework& f, const Extension& b);
/// B together with every argument c with W(B,c) strictly worse than alpha.
Extension alpha_range(const Framework& f, const Extension& b, const SemiringValue& alpha);

/// Renders {x,y} using argument names.
std::string format_extension(const Framework& f, const Extension& e);
/// Parses a comma-separated list of argument names ("a,c"; "" is the empty set).
Extension parse_extension(const Framework& f, std::string_view text);

}  // namespace argcsp
