#pragma once

// Definition-level checkers for classical and alpha-weighted semantics, and
// a brute-force enumerator over all subsets. This is the ground truth the
// constraint encodings are validated against.

#include "argcsp/framework.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace argcsp {

class SemanticsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SemanticsKind { ConflictFree, Admissible, Complete, Stable, Preferred, Grounded, SemiStable, Stage, Ideal };

/// How alpha-stable treats arguments outside the extension.
///   Strict:    W(B,c) must be strictly worse than alpha.
///   AnyAttack: some member must attack c (W(B,c) strictly worse than top).
enum class StableRule { Strict, AnyAttack };

/// Which attackers a weighted defense has to answer.
///   OutsideAttackers: attackers outside B only; attacks inside B are paid
///                     for by the alpha budget.
///   AllAttackers:     every attacker, including members of B.
enum class DefenseScope { OutsideAttackers, AllAttackers };

struct SemanticsSpec {
  SemanticsKind kind = SemanticsKind::ConflictFree;
  /// Present iff the semantics is weighted.
  std::optional<SemiringValue> threshold;
  StableRule stable_rule = StableRule::Strict;
  DefenseScope defense_scope = DefenseScope::OutsideAttackers;

  static SemanticsSpec classical(SemanticsKind kind) { return SemanticsSpec{kind, std::nullopt}; }
  static SemanticsSpec weighted(SemanticsKind kind, SemiringValue alpha, StableRule rule = StableRule::Strict,
                                DefenseScope scope = DefenseScope::OutsideAttackers) {
    return SemanticsSpec{kind, std::move(alpha), rule, scope};
  }

  [[nodiscard]] bool is_weighted() const { return threshold.has_value(); }
  [[nodiscard]] SemanticsSpec with_kind(SemanticsKind k) const {
    SemanticsSpec s = *this;
    s.kind = k;
    return s;
  }
};

std::string_view to_string(SemanticsKind kind);
std::optional<SemanticsKind> parse_semantics_kind(std::string_view name);
/// ConflictFree, Admissible, Complete and Stable have direct encodings; the
/// others are inclusion-extremal filters over one of them.
bool is_base_kind(SemanticsKind kind);

/// Throws SemanticsError when weightedness of spec and framework disagree or
/// the threshold is not a value of the framework's semiring.
void validate(const Framework& f, const SemanticsSpec& spec);

/// Whether B defends x: classically, B attacks every attacker of x; weighted,
/// every (in-scope) attacker y has W(y,x) strictly better than W(B,y).
bool defends(const Framework& f, const Extension& b, ArgumentId x, const SemanticsSpec& spec);

bool is_conflict_free(const Framework& f, const Extension& b, const SemanticsSpec& spec);
bool is_admissible(const Framework& f, const Extension& b, const SemanticsSpec& spec);
/// Weighted completeness exempts a defended outsider x when B with x is no
/// longer alpha-conflict-free.
bool is_complete(const Framework& f, const Extension& b, const SemanticsSpec& spec);
bool is_stable(const Framework& f, const Extension& b, const SemanticsSpec& spec);

/// Range (classical) or alpha-range (weighted); the key of stage/semi-stable.
Extension semantic_range(const Framework& f, const Extension& b, const SemanticsSpec& spec);

/// Literal membership test. Extremal kinds delegate to enumerate_bruteforce.
bool check(const Framework& f, const Extension& b, const SemanticsSpec& spec);

inline constexpr std::size_t kDefaultBruteforceCap = 16;

/// All extensions, by testing each of the 2^n subsets.
ExtensionSet enumerate_bruteforce(const Framework& f, const SemanticsSpec& spec,
                                  std::size_t cap = kDefaultBruteforceCap);

/// Least fixpoint of the classical characteristic function, iterated from the
/// empty set; ignores weights.
Extension grounded_fixpoint(const Framework& f);

}  // namespace argcsp
