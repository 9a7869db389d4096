#include "argcsp/csp.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace argcsp {

// ---------------------------------------------------------------------------
// Model

void Model::check(const Literal& l) const {
  if (l.var >= variables_) throw std::out_of_range("literal on unknown variable " + std::to_string(l.var));
}

void Model::check(const Cnf& cnf) const {
  for (const auto& clause : cnf) {
    for (const auto& l : clause) check(l);
  }
}

const SemiringInstance& Model::need_semiring() const {
  if (!semiring_) throw std::invalid_argument("model has no semiring");
  return *semiring_;
}

bool Model::add_nogood(std::vector<Literal> literals) {
  for (const auto& l : literals) check(l);
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (literals[i].var == literals[i - 1].var) return false;
  }
  nogoods_.push_back(Nogood{std::move(literals)});
  return true;
}

void Model::add_requirement(ConditionalRequirement req) {
  check(req.guard);
  check(req.consequence);
  requirements_.push_back(std::move(req));
}

void Model::add_cost_term(CostTerm term) {
  need_semiring().require(term.cost);
  for (const auto& l : term.trigger) check(l);
  cost_terms_.push_back(std::move(term));
}

void Model::add_threshold_requirement(ThresholdRequirement req) {
  const auto& s = need_semiring();
  s.require(req.threshold);
  check(req.guard);
  for (const auto& t : req.terms) {
    s.require(t.cost);
    for (const auto& l : t.trigger) check(l);
  }
  threshold_reqs_.push_back(std::move(req));
}

void Model::set_threshold(SemiringValue alpha) {
  need_semiring().require(alpha);
  threshold_ = std::move(alpha);
}

// ---------------------------------------------------------------------------
// Evaluation under total assignments

bool holds_all(const std::vector<Literal>& conj, const Assignment& a) {
  return std::all_of(conj.begin(), conj.end(), [&](const Literal& l) { return a.contains(l.var) == l.value; });
}

bool holds(const Cnf& cnf, const Assignment& a) {
  return std::all_of(cnf.begin(), cnf.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a.contains(l.var) == l.value; });
  });
}

namespace {

SemiringValue combine_triggered(const SemiringInstance& s, const std::vector<CostTerm>& terms, const Assignment& a) {
  SemiringValue acc = s.top();
  for (const auto& t : terms) {
    if (holds_all(t.trigger, a)) acc = s.times(acc, t.cost);
  }
  return acc;
}

bool relation_holds(const SemiringInstance& s, BudgetRelation rel, const SemiringValue& v, const SemiringValue& alpha) {
  return rel == BudgetRelation::Below ? s.lt(v, alpha) : !s.leq(alpha, v);
}

bool hard_constraints_hold(const Model& m, const Assignment& a) {
  for (const auto& ng : m.nogoods()) {
    if (holds_all(ng.literals, a)) return false;
  }
  for (const auto& r : m.requirements()) {
    if (holds(r.guard, a) && !holds(r.consequence, a)) return false;
  }
  for (const auto& r : m.threshold_requirements()) {
    if (holds(r.guard, a) &&
        !relation_holds(*m.semiring(), r.relation, combine_triggered(*m.semiring(), r.terms, a), r.threshold)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Search

enum class Mode { Enumerate, Budget, Best };

enum class Status { False, True, Unknown };

class Solver {
 public:
  Solver(const Model& m, const SearchConfig& cfg, Mode mode)
      : m_(m), cfg_(cfg), mode_(mode), n_(m.variables()), value_(m.variables(), -1), rng_(cfg.seed) {
    if (cfg_.timeout_ms == 0) throw std::invalid_argument("timeout must be positive");
    nogood_occ_.resize(n_);
    req_occ_.resize(n_);
    term_occ_.resize(n_);
    treq_occ_.resize(n_);
    std::vector<std::size_t> degree(n_, 0);
    auto note = [&](std::vector<std::vector<std::uint32_t>>& occ, std::vector<VarId> vars, std::uint32_t idx) {
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (VarId v : vars) {
        occ[v].push_back(idx);
        ++degree[v];
      }
      return vars;
    };
    for (std::uint32_t i = 0; i < m_.nogoods().size(); ++i) {
      std::vector<VarId> vars;
      for (const auto& l : m_.nogoods()[i].literals) vars.push_back(l.var);
      note(nogood_occ_, std::move(vars), i);
    }
    for (std::uint32_t i = 0; i < m_.requirements().size(); ++i) {
      std::vector<VarId> vars;
      cnf_vars(m_.requirements()[i].guard, vars);
      cnf_vars(m_.requirements()[i].consequence, vars);
      note(req_occ_, std::move(vars), i);
    }
    if (mode_ != Mode::Enumerate) {
      for (std::uint32_t i = 0; i < m_.cost_terms().size(); ++i) {
        std::vector<VarId> vars;
        for (const auto& l : m_.cost_terms()[i].trigger) vars.push_back(l.var);
        note(term_occ_, std::move(vars), i);
      }
    }
    for (std::uint32_t i = 0; i < m_.threshold_requirements().size(); ++i) {
      const auto& r = m_.threshold_requirements()[i];
      std::vector<VarId> vars;
      cnf_vars(r.guard, vars);
      for (const auto& t : r.terms) {
        for (const auto& l : t.trigger) vars.push_back(l.var);
      }
      treq_scope_.push_back(note(treq_occ_, std::move(vars), i));
    }

    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), VarId{0});
    if (cfg_.variable_heuristic == VariableHeuristic::MostConstrainedStatic) {
      std::stable_sort(order_.begin(), order_.end(), [&](VarId a, VarId b) { return degree[a] > degree[b]; });
    }
    if (mode_ != Mode::Enumerate) acc_ = m_.semiring()->top();
  }

  SolveOutcome run() {
    start_ = std::chrono::steady_clock::now();
    root();
    if (!conflict_) propagate();
    if (!conflict_) search(0);
    SolveOutcome out;
    out.solutions = std::move(solutions_);
    out.complete = !stopped_;
    out.timed_out = timed_out_;
    out.nodes = nodes_;
    out.seed = cfg_.seed;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return out;
  }

  [[nodiscard]] const std::optional<SemiringValue>& best() const { return best_; }

 private:
  static void cnf_vars(const Cnf& cnf, std::vector<VarId>& out) {
    for (const auto& c : cnf) {
      for (const auto& l : c) out.push_back(l.var);
    }
  }

  [[nodiscard]] bool is_true(const Literal& l) const { return value_[l.var] == static_cast<std::int8_t>(l.value); }
  [[nodiscard]] bool is_false(const Literal& l) const {
    return value_[l.var] != -1 && value_[l.var] != static_cast<std::int8_t>(l.value);
  }

  [[nodiscard]] Status status(const Clause& c) const {
    bool unknown = false;
    for (const auto& l : c) {
      if (is_true(l)) return Status::True;
      if (!is_false(l)) unknown = true;
    }
    return unknown ? Status::Unknown : Status::False;
  }

  [[nodiscard]] Status status(const Cnf& cnf) const {
    bool unknown = false;
    for (const auto& c : cnf) {
      Status s = status(c);
      if (s == Status::False) return Status::False;
      if (s == Status::Unknown) unknown = true;
    }
    return unknown ? Status::Unknown : Status::True;
  }

  void assign(VarId v, bool val) {
    if (value_[v] != -1) {
      if (value_[v] != static_cast<std::int8_t>(val)) conflict_ = true;
      return;
    }
    value_[v] = static_cast<std::int8_t>(val);
    trail_.push_back(v);
    if (mode_ == Mode::Enumerate) return;
    // A term is charged exactly when its last trigger literal becomes true.
    for (std::uint32_t t : term_occ_[v]) {
      const auto& term = m_.cost_terms()[t];
      if (std::all_of(term.trigger.begin(), term.trigger.end(), [&](const Literal& l) { return is_true(l); })) {
        charge(term.cost);
      }
    }
  }

  void charge(const SemiringValue& cost) {
    const auto& s = *m_.semiring();
    acc_trail_.emplace_back(trail_.size(), *acc_);
    acc_ = s.times(*acc_, cost);
    if (out_of_budget(*acc_)) conflict_ = true;
  }

  [[nodiscard]] bool out_of_budget(const SemiringValue& v) const {
    const auto& s = *m_.semiring();
    if (mode_ == Mode::Budget) return !s.leq(*m_.threshold(), v);
    if (mode_ == Mode::Best) return best_ && s.leq(v, *best_);
    return false;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, mark);
    while (!acc_trail_.empty() && acc_trail_.back().first > mark) {
      acc_ = acc_trail_.back().second;
      acc_trail_.pop_back();
    }
    conflict_ = false;
  }

  void process_nogood(std::uint32_t i) {
    const Literal* open = nullptr;
    std::size_t unassigned = 0;
    for (const auto& l : m_.nogoods()[i].literals) {
      if (is_false(l)) return;
      if (!is_true(l)) {
        ++unassigned;
        open = &l;
      }
    }
    if (unassigned == 0) {
      conflict_ = true;
    } else if (unassigned == 1) {
      assign(open->var, !open->value);
    }
  }

  void process_requirement(std::uint32_t i) {
    const auto& r = m_.requirements()[i];
    if (status(r.guard) != Status::True) return;
    for (const auto& c : r.consequence) {
      const Literal* open = nullptr;
      std::size_t unassigned = 0;
      bool satisfied = false;
      for (const auto& l : c) {
        if (is_true(l)) {
          satisfied = true;
          break;
        }
        if (!is_false(l)) {
          ++unassigned;
          open = &l;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) {
        conflict_ = true;
        return;
      }
      if (unassigned == 1) assign(open->var, open->value);
      if (conflict_) return;
    }
  }

  // Forward check on costs: a term one literal away from firing whose cost
  // would break the budget forbids that literal.
  void process_term(std::uint32_t i) {
    if (mode_ != Mode::Budget) return;
    const auto& term = m_.cost_terms()[i];
    const Literal* open = nullptr;
    std::size_t unassigned = 0;
    for (const auto& l : term.trigger) {
      if (is_false(l)) return;
      if (!is_true(l)) {
        ++unassigned;
        open = &l;
      }
    }
    if (unassigned != 1) return;
    if (out_of_budget(m_.semiring()->times(*acc_, term.cost))) assign(open->var, !open->value);
  }

  void process_threshold(std::uint32_t i) {
    for (VarId v : treq_scope_[i]) {
      if (value_[v] == -1) return;
    }
    const auto& r = m_.threshold_requirements()[i];
    if (status(r.guard) != Status::True) return;
    const auto& s = *m_.semiring();
    SemiringValue acc = s.top();
    for (const auto& t : r.terms) {
      if (std::all_of(t.trigger.begin(), t.trigger.end(), [&](const Literal& l) { return is_true(l); })) {
        acc = s.times(acc, t.cost);
      }
    }
    if (!relation_holds(s, r.relation, acc, r.threshold)) conflict_ = true;
  }

  void root() {
    if (mode_ != Mode::Enumerate) {
      for (const auto& t : m_.cost_terms()) {
        if (t.trigger.empty()) charge(t.cost);
      }
      for (std::uint32_t i = 0; i < m_.cost_terms().size() && !conflict_; ++i) process_term(i);
    }
    for (std::uint32_t i = 0; i < m_.nogoods().size() && !conflict_; ++i) process_nogood(i);
    for (std::uint32_t i = 0; i < m_.requirements().size() && !conflict_; ++i) process_requirement(i);
    for (std::uint32_t i = 0; i < m_.threshold_requirements().size() && !conflict_; ++i) process_threshold(i);
  }

  void propagate() {
    while (qhead_ < trail_.size() && !conflict_) {
      VarId v = trail_[qhead_++];
      for (std::uint32_t i : nogood_occ_[v]) {
        process_nogood(i);
        if (conflict_) return;
      }
      for (std::uint32_t i : req_occ_[v]) {
        process_requirement(i);
        if (conflict_) return;
      }
      for (std::uint32_t i : term_occ_[v]) {
        process_term(i);
        if (conflict_) return;
      }
      for (std::uint32_t i : treq_occ_[v]) {
        process_threshold(i);
        if (conflict_) return;
      }
    }
  }

  bool out_of_time() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed >= std::chrono::milliseconds(cfg_.timeout_ms)) {
      timed_out_ = true;
      stopped_ = true;
    }
    return stopped_;
  }

  void leaf() {
    if (mode_ == Mode::Best) {
      best_ = best_ ? m_.semiring()->plus(*best_, *acc_) : *acc_;
      return;
    }
    Assignment a(n_);
    for (VarId v = 0; v < n_; ++v) {
      if (value_[v] == 1) a.insert(v);
    }
    solutions_.insert(std::move(a));
    if (cfg_.solution_cap && solutions_.size() >= *cfg_.solution_cap) stopped_ = true;
  }

  void search(std::size_t pos) {
    if (out_of_time()) return;
    while (pos < order_.size() && value_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) {
      leaf();
      return;
    }
    VarId v = order_[pos];
    bool first = true;
    switch (cfg_.value_heuristic) {
      case ValueHeuristic::OneFirst: first = true; break;
      case ValueHeuristic::ZeroFirst: first = false; break;
      case ValueHeuristic::SeededRandom: first = (rng_() & 1U) != 0; break;
    }
    for (bool val : {first, !first}) {
      std::size_t mark = trail_.size();
      ++nodes_;
      assign(v, val);
      if (!conflict_) propagate();
      if (!conflict_) search(pos + 1);
      undo(mark);
      if (stopped_) return;
    }
  }

  const Model& m_;
  const SearchConfig& cfg_;
  Mode mode_;
  std::size_t n_;
  std::vector<std::int8_t> value_;
  std::vector<VarId> trail_;
  std::size_t qhead_ = 0;
  bool conflict_ = false;
  bool stopped_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;

  std::vector<std::vector<std::uint32_t>> nogood_occ_;
  std::vector<std::vector<std::uint32_t>> req_occ_;
  std::vector<std::vector<std::uint32_t>> term_occ_;
  std::vector<std::vector<std::uint32_t>> treq_occ_;
  std::vector<std::vector<VarId>> treq_scope_;
  std::vector<VarId> order_;

  std::optional<SemiringValue> acc_;
  std::vector<std::pair<std::size_t, SemiringValue>> acc_trail_;
  std::optional<SemiringValue> best_;

  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point start_;
  ExtensionSet solutions_;
};

}  // namespace

SolveOutcome solve_all(const Model& m, const SearchConfig& cfg) { return Solver(m, cfg, Mode::Enumerate).run(); }

SolveOutcome solve_within_budget(const Model& m, const SearchConfig& cfg) {
  if (!m.semiring() || !m.threshold()) throw std::invalid_argument("budget solving needs a semiring and a threshold");
  return Solver(m, cfg, Mode::Budget).run();
}

SemiringValue evaluate(const Model& m, const Assignment& a) {
  if (!m.semiring()) throw std::invalid_argument("evaluation needs a semiring");
  if (a.universe() != m.variables()) throw std::invalid_argument("assignment does not cover the model's variables");
  const auto& s = *m.semiring();
  if (!hard_constraints_hold(m, a)) return s.bottom();
  return combine_triggered(s, m.cost_terms(), a);
}

SemiringValue blevel(const Model& m, const SearchConfig& cfg) {
  if (!m.semiring()) throw std::invalid_argument("blevel needs a semiring");
  Solver solver(m, cfg, Mode::Best);
  solver.run();
  return solver.best() ? *solver.best() : m.semiring()->bottom();
}

}  // namespace argcsp
