#pragma once

// Text form of user requirements over argument names:
//
//   requirement := "if" cnf "then" cnf | cnf
//   cnf         := clause ("&" clause)*
//   clause      := literal ("|" literal)* | "(" literal ("|" literal)* ")"
//   literal     := ["!"] NAME
//
// "|" binds tighter than "&", so `a|b&c` reads (a or b) and c.

#include "argcsp/encodings.hpp"

#include <stdexcept>
#include <string_view>

namespace argcsp {

class RequirementSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `if G then C` yields guard G and consequence C; a bare formula is required
/// unconditionally.
UserRequirement parse_requirement(const Framework& f, std::string_view text);

/// Forbids every extension satisfying the formula (guard = formula,
/// consequence = false).
UserRequirement parse_prohibition(const Framework& f, std::string_view text);

}  // namespace argcsp
