#pragma once

// Constraint models for the base semantics (conflict-free, admissible,
// complete, stable; classical and alpha-weighted) and the inclusion filters
// that derive preferred, grounded, semi-stable, stage and ideal from them.

#include "argcsp/csp.hpp"
#include "argcsp/framework.hpp"
#include "argcsp/semantics.hpp"

#include <stdexcept>
#include <vector>

namespace argcsp {

class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a decision procedure runs out of time before it can answer.
class SearchTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A side requirement over argument membership: literal var i means argument i.
struct UserRequirement {
  Cnf guard;
  Cnf consequence;
};

struct EncodingRequest {
  Framework framework;
  SemanticsSpec spec;
  SearchConfig search;
  std::vector<UserRequirement> requirements;
  /// Re-check every base-phase candidate with the definition-level checker.
  bool leaf_validation = true;
};

struct EnumerateOutcome {
  SolveOutcome outcome;
  /// Candidates the leaf check rejected; nonzero means the encoding is wrong.
  std::uint64_t rejected = 0;
};

/// Largest attacker in-degree for which weighted defense guards are
/// generated (the guards enumerate attacker subsets).
inline constexpr std::size_t kMaxWeightedInDegree = 20;

/// Model for a base kind; throws EncodingError for the extremal kinds.
Model encode(const Framework& f, const SemanticsSpec& spec);

/// Appends one ConditionalRequirement per user requirement.
Model apply_user_requirements(Model m, const std::vector<UserRequirement>& reqs);

EnumerateOutcome enumerate(const EncodingRequest& req);

enum class Direction { Max, Min };
enum class ExtremalKey { Membership, Range };

/// Keeps the sets whose key is inclusion-maximal (or minimal). The Range key
/// needs the framework and semantics that define the range.
ExtensionSet filter_extremal(const ExtensionSet& sets, Direction dir, ExtremalKey key = ExtremalKey::Membership,
                             const Framework* f = nullptr, const SemanticsSpec* spec = nullptr);

/// Whether t is a classical preferred extension: t is admissible and the
/// admissible model extended with "all of t, plus something else" is UNSAT.
/// Throws SearchTimeout if that search does not finish.
bool is_preferred(const Framework& f, const Extension& t, const SearchConfig& cfg);

}  // namespace argcsp
