#include "argcsp/wge.hpp"

#include "argcsp/encodings.hpp"

#include <algorithm>
#include <numeric>

namespace argcsp {

namespace {

void require_costs(const Framework& f) {
  if (!f.is_weighted() || f.semiring().kind() != SemiringKind::Weighted) {
    throw WgeError("inconsistency budgets need a framework weighted over the cost semiring");
  }
}

struct CostOrder {
  std::vector<std::size_t> order;  // removable attacks, ascending by weight
  std::vector<Budget> weight;      // weight[k] of order[k]
};

CostOrder removable_by_cost(const Framework& f) {
  auto weights = f.weights();
  CostOrder c;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!weights[i].is_infinite()) c.order.push_back(i);
  }
  std::stable_sort(c.order.begin(), c.order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a].as_cost() < weights[b].as_cost(); });
  for (std::size_t i : c.order) c.weight.push_back(weights[i].as_cost());
  return c;
}

RemovalSet to_removal(const CostOrder& c, const std::vector<std::size_t>& picked, Budget sum) {
  RemovalSet s;
  for (std::size_t k : picked) s.attacks.push_back(c.order[k]);
  std::sort(s.attacks.begin(), s.attacks.end());
  s.weight = sum;
  return s;
}

}  // namespace

void for_each_removal_set(const Framework& f, Budget beta, const std::function<bool(const RemovalSet&)>& visit) {
  require_costs(f);
  const CostOrder c = removable_by_cost(f);
  std::vector<std::size_t> picked;
  bool go = true;
  std::function<void(std::size_t, Budget)> dfs = [&](std::size_t start, Budget sum) {
    go = visit(to_removal(c, picked, sum));
    for (std::size_t k = start; k < c.order.size() && go; ++k) {
      if (c.weight[k] > beta - sum) break;
      picked.push_back(k);
      dfs(k + 1, sum + c.weight[k]);
      picked.pop_back();
    }
  };
  dfs(0, 0);
}

std::vector<RemovalSet> removal_sets(const Framework& f, Budget beta) {
  std::vector<RemovalSet> out;
  for_each_removal_set(f, beta, [&](const RemovalSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Extension grounded_after_removal(const Framework& f, const RemovalSet& s, const SearchConfig& cfg) {
  std::vector<bool> mask(f.attacks().size(), false);
  for (std::size_t i : s.attacks) mask.at(i) = true;
  EncodingRequest req{f.without_attacks(mask).unweighted(), SemanticsSpec::classical(SemanticsKind::Grounded), cfg,
                      {}, true};
  auto res = enumerate(req);
  if (!res.outcome.complete) throw SearchTimeout("grounded computation timed out");
  if (res.outcome.solutions.size() != 1) throw std::logic_error("classical grounded extension is not unique");
  return res.outcome.solutions.front();
}

ExtensionSet wge(const Framework& f, Budget beta, const SearchConfig& cfg) {
  ExtensionSet out;
  for_each_removal_set(f, beta, [&](const RemovalSet& s) {
    out.insert(grounded_after_removal(f, s, cfg));
    return true;
  });
  return out;
}

WgeAnswer credulous(const Framework& f, Budget beta, ArgumentId a, const SearchConfig& cfg) {
  if (a >= f.size()) throw WgeError("argument id out of range");
  WgeAnswer ans;
  for_each_removal_set(f, beta, [&](const RemovalSet& s) {
    Extension g = grounded_after_removal(f, s, cfg);
    if (!g.contains(a)) return true;
    ans = {true, std::move(g), s};
    return false;
  });
  return ans;
}

WgeAnswer skeptical(const Framework& f, Budget beta, ArgumentId a, const SearchConfig& cfg) {
  if (a >= f.size()) throw WgeError("argument id out of range");
  WgeAnswer ans{true, std::nullopt, std::nullopt};
  for_each_removal_set(f, beta, [&](const RemovalSet& s) {
    Extension g = grounded_after_removal(f, s, cfg);
    if (g.contains(a)) return true;
    ans = {false, std::move(g), s};
    return false;
  });
  return ans;
}

std::optional<MinimalBudget> minimal_budget(const Framework& f, const Extension& l, const SearchConfig& cfg) {
  require_costs(f);
  if (l.universe() != f.size()) throw WgeError("extension does not match the framework");
  const CostOrder c = removable_by_cost(f);
  std::optional<MinimalBudget> best;
  std::vector<std::size_t> picked;
  // Branch and bound: supersets of a removal only cost more, so a match ends
  // its branch and any partial sum reaching the best so far is cut.
  std::function<void(std::size_t, Budget)> dfs = [&](std::size_t start, Budget sum) {
    RemovalSet s = to_removal(c, picked, sum);
    if (grounded_after_removal(f, s, cfg) == l) {
      best = MinimalBudget{sum, std::move(s)};
      return;
    }
    for (std::size_t k = start; k < c.order.size(); ++k) {
      if (best && c.weight[k] >= best->budget - sum) break;
      if (c.weight[k] >= SemiringValue::kInfiniteCost - sum) break;
      picked.push_back(k);
      dfs(k + 1, sum + c.weight[k]);
      picked.pop_back();
    }
  };
  dfs(0, 0);
  return best;
}

bool is_minimal(const Framework& f, const Extension& l, Budget beta, const SearchConfig& cfg) {
  auto m = minimal_budget(f, l, cfg);
  return m && m->budget == beta;
}

}  // namespace argcsp
