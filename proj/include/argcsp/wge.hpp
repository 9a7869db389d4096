#pragma once

// Inconsistency budgets: grounded extensions reachable by deleting attacks
// whose weights sum to at most beta. Weighted (cost) frameworks only.

#include "argcsp/csp.hpp"
#include "argcsp/framework.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace argcsp {

class WgeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-negative integer budget; attacks of infinite weight are never removable.
using Budget = std::uint64_t;

struct RemovalSet {
  /// Indices into Framework::attacks(), ascending.
  std::vector<std::size_t> attacks;
  Budget weight = 0;
};

/// Every removal set of total weight at most beta, the empty one included.
std::vector<RemovalSet> removal_sets(const Framework& f, Budget beta);

/// Visits removal sets of weight at most beta until the callback returns false.
void for_each_removal_set(const Framework& f, Budget beta, const std::function<bool(const RemovalSet&)>& visit);

/// Classical grounded extension of f without the attacks in s.
Extension grounded_after_removal(const Framework& f, const RemovalSet& s, const SearchConfig& cfg = {});

ExtensionSet wge(const Framework& f, Budget beta, const SearchConfig& cfg = {});

struct WgeAnswer {
  bool value = false;
  /// The extension settling the question (a member of wge containing the
  /// argument, or one lacking it) and the removal that produced it.
  std::optional<Extension> witness;
  std::optional<RemovalSet> removal;
};

WgeAnswer credulous(const Framework& f, Budget beta, ArgumentId a, const SearchConfig& cfg = {});
WgeAnswer skeptical(const Framework& f, Budget beta, ArgumentId a, const SearchConfig& cfg = {});

struct MinimalBudget {
  Budget budget = 0;
  RemovalSet removal;
};

/// Cheapest removal whose grounded extension is exactly l; nullopt if none.
std::optional<MinimalBudget> minimal_budget(const Framework& f, const Extension& l, const SearchConfig& cfg = {});
bool is_minimal(const Framework& f, const Extension& l, Budget beta, const SearchConfig& cfg = {});

}  // namespace argcsp
