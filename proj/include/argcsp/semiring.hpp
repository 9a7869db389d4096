#pragma once

// c-semiring algebra used to weight attacks and to combine soft-constraint
// costs. Values are exact: costs are integers with an explicit infinity,
// fuzzy levels are fixed-point hundredths, probabilities are rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace argcsp {

using Rational = boost::multiprecision::cpp_rational;

/// Raised on tag mismatches and out-of-domain values.
class SemiringError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ValueTag { Boolean, Cost, Hundredths, Probability, Pair };

class SemiringValue {
 public:
  static constexpr std::uint64_t kInfiniteCost = UINT64_MAX;

  SemiringValue() : rep_(false) {}

  static SemiringValue boolean(bool v);
  static SemiringValue cost(std::uint64_t v);
  static SemiringValue infinite_cost();
  static SemiringValue hundredths(int v);
  static SemiringValue probability(Rational v);
  static SemiringValue probability_hundredths(int v);
  static SemiringValue pair(SemiringValue first, SemiringValue second);

  [[nodiscard]] ValueTag tag() const;

  [[nodiscard]] bool as_bool() const;
  /// Finite cost, or kInfiniteCost.
  [[nodiscard]] std::uint64_t as_cost() const;
  [[nodiscard]] bool is_infinite() const { return tag() == ValueTag::Cost && as_cost() == kInfiniteCost; }
  [[nodiscard]] int as_hundredths() const;
  [[nodiscard]] const Rational& as_probability() const;
  [[nodiscard]] const SemiringValue& first() const;
  [[nodiscard]] const SemiringValue& second() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SemiringValue& a, const SemiringValue& b);
  /// Total order over representations (tag first); used for containers only,
  /// unrelated to any semiring preference order.
  friend bool operator<(const SemiringValue& a, const SemiringValue& b);

 private:
  struct CostRep {
    std::uint64_t value;
  };
  struct HundredthsRep {
    int value;
  };
  using PairRep = std::shared_ptr<const std::pair<SemiringValue, SemiringValue>>;

  explicit SemiringValue(std::variant<bool, CostRep, HundredthsRep, Rational, PairRep> rep)
      : rep_(std::move(rep)) {}

  std::variant<bool, CostRep, HundredthsRep, Rational, PairRep> rep_;
};

enum class SemiringKind { Boolean, Weighted, Fuzzy, Probabilistic, Product };

std::string_view to_string(SemiringKind kind);

class SemiringInstance {
 public:
  /// Any kind except Product, which needs components.
  static SemiringInstance make(SemiringKind kind);
  static SemiringInstance product(SemiringInstance first, SemiringInstance second);

  [[nodiscard]] SemiringKind kind() const { return kind_; }
  [[nodiscard]] const SemiringInstance& first() const;
  [[nodiscard]] const SemiringInstance& second() const;

  [[nodiscard]] SemiringValue plus(const SemiringValue& a, const SemiringValue& b) const;
  [[nodiscard]] SemiringValue times(const SemiringValue& a, const SemiringValue& b) const;
  [[nodiscard]] SemiringValue bottom() const;
  [[nodiscard]] SemiringValue top() const;

  /// a <=_S b iff a + b = b, i.e. b is at least as good as a.
  [[nodiscard]] bool leq(const SemiringValue& a, const SemiringValue& b) const;
  [[nodiscard]] bool lt(const SemiringValue& a, const SemiringValue& b) const;
  [[nodiscard]] bool geq(const SemiringValue& a, const SemiringValue& b) const { return leq(b, a); }
  [[nodiscard]] bool gt(const SemiringValue& a, const SemiringValue& b) const { return lt(b, a); }

  /// Left fold of times; the empty fold is top.
  [[nodiscard]] SemiringValue combine(std::span<const SemiringValue> values) const;

  /// Whether v carries this instance's tag and lies in its carrier.
  [[nodiscard]] bool accepts(const SemiringValue& v) const;
  void require(const SemiringValue& v) const;

  /// Parses a textual value: integers or "inf" (Weighted), decimals in [0,1]
  /// with at most two places (Fuzzy, Probabilistic), true/false (Boolean).
  [[nodiscard]] SemiringValue parse(std::string_view text) const;

  [[nodiscard]] std::string name() const;

  friend bool operator==(const SemiringInstance& a, const SemiringInstance& b);

 private:
  explicit SemiringInstance(SemiringKind kind) : kind_(kind) {}

  SemiringKind kind_;
  std::shared_ptr<const SemiringInstance> first_;
  std::shared_ptr<const SemiringInstance> second_;
};

SemiringInstance make_instance(SemiringKind kind);
SemiringInstance make_product(SemiringInstance first, SemiringInstance second);

inline bool leq(const SemiringValue& a, const SemiringValue& b, const SemiringInstance& s) { return s.leq(a, b); }

inline SemiringValue combine(std::span<const SemiringValue> values, const SemiringInstance& s) {
  return s.combine(values);
}

}  // namespace argcsp
