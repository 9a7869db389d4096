#pragma once

// A small finite-domain engine over binary variables. Hard constraints are
// nogoods and conditional requirements; soft constraints are semiring cost
// terms compared against a threshold. Search is depth-first with forward
// checking and a static variable order.

#include "argcsp/extension.hpp"
#include "argcsp/semiring.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace argcsp {

using VarId = std::uint32_t;

struct Literal {
  VarId var = 0;
  bool value = true;

  [[nodiscard]] Literal negated() const { return Literal{var, !value}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(VarId v) { return Literal{v, true}; }
inline Literal neg(VarId v) { return Literal{v, false}; }

/// Disjunction of literals; an empty clause is false.
using Clause = std::vector<Literal>;
/// Conjunction of clauses; an empty formula is true.
using Cnf = std::vector<Clause>;

/// Forbids every assignment that satisfies all of its literals.
struct Nogood {
  std::vector<Literal> literals;
};

/// Whenever the guard holds, the consequence must hold too.
struct ConditionalRequirement {
  Cnf guard;
  Cnf consequence;
};

/// Contributes `cost` when every trigger literal holds, top otherwise.
struct CostTerm {
  std::vector<Literal> trigger;
  SemiringValue cost;
};

enum class BudgetRelation {
  /// combined cost strictly worse than the threshold
  Below,
  /// combined cost not at least as good as the threshold
  NotWithin,
};

/// Whenever the guard holds, the combine of the triggered `terms` must stand
/// in `relation` to `threshold`. Checked once all of its variables are fixed.
struct ThresholdRequirement {
  Cnf guard;
  std::vector<CostTerm> terms;
  SemiringValue threshold;
  BudgetRelation relation = BudgetRelation::Below;
};

/// Total assignment; member i is set iff variable i takes value 1.
using Assignment = Extension;

class Model {
 public:
  explicit Model(std::size_t variables = 0) : variables_(variables) {}
  Model(std::size_t variables, SemiringInstance semiring) : variables_(variables), semiring_(std::move(semiring)) {}

  [[nodiscard]] std::size_t variables() const { return variables_; }

  /// Normalizes (sorts, dedupes) the literals. A nogood mentioning both values
  /// of one variable can never fire and is dropped; returns whether it was kept.
  bool add_nogood(std::vector<Literal> literals);
  void add_requirement(ConditionalRequirement req);
  void add_cost_term(CostTerm term);
  void add_threshold_requirement(ThresholdRequirement req);
  void set_threshold(SemiringValue alpha);

  [[nodiscard]] const std::vector<Nogood>& nogoods() const { return nogoods_; }
  [[nodiscard]] const std::vector<ConditionalRequirement>& requirements() const { return requirements_; }
  [[nodiscard]] const std::vector<CostTerm>& cost_terms() const { return cost_terms_; }
  [[nodiscard]] const std::vector<ThresholdRequirement>& threshold_requirements() const { return threshold_reqs_; }
  [[nodiscard]] const std::optional<SemiringInstance>& semiring() const { return semiring_; }
  [[nodiscard]] const std::optional<SemiringValue>& threshold() const { return threshold_; }

 private:
  void check(const Literal& l) const;
  void check(const Cnf& cnf) const;
  const SemiringInstance& need_semiring() const;

  std::size_t variables_ = 0;
  std::vector<Nogood> nogoods_;
  std::vector<ConditionalRequirement> requirements_;
  std::vector<CostTerm> cost_terms_;
  std::vector<ThresholdRequirement> threshold_reqs_;
  std::optional<SemiringInstance> semiring_;
  std::optional<SemiringValue> threshold_;
};

enum class VariableHeuristic {
  /// Descending number of constraints mentioning the variable, ties by index.
  MostConstrainedStatic,
  InputOrder,
};

enum class ValueHeuristic { OneFirst, ZeroFirst, SeededRandom };

struct SearchConfig {
  VariableHeuristic variable_heuristic = VariableHeuristic::MostConstrainedStatic;
  ValueHeuristic value_heuristic = ValueHeuristic::OneFirst;
  std::uint64_t seed = 0;
  std::uint64_t timeout_ms = 180000;
  std::optional<std::size_t> solution_cap;
};

struct SolveOutcome {
  ExtensionSet solutions;
  /// False iff the timeout or the solution cap stopped the search.
  bool complete = true;
  bool timed_out = false;
  double elapsed_ms = 0.0;
  std::uint64_t nodes = 0;
  std::uint64_t seed = 0;
};

/// Evaluates a CNF under a total assignment.
bool holds(const Cnf& cnf, const Assignment& a);
bool holds_all(const std::vector<Literal>& conj, const Assignment& a);

/// Every assignment satisfying the hard constraints. Cost terms are ignored.
SolveOutcome solve_all(const Model& m, const SearchConfig& cfg);

/// Assignments satisfying the hard constraints whose combined cost is at
/// least as good as the model threshold. Partial assignments whose
/// accumulated cost is already out of budget are pruned.
SolveOutcome solve_within_budget(const Model& m, const SearchConfig& cfg);

/// Combined cost of a total assignment; bottom if a hard constraint fails.
SemiringValue evaluate(const Model& m, const Assignment& a);

/// Plus-fold of evaluate over all total assignments, by branch and bound.
SemiringValue blevel(const Model& m, const SearchConfig& cfg);

}  // namespace argcsp
