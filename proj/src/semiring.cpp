#include "argcsp/semiring.hpp"

#include <charconv>
#include <sstream>

namespace argcsp {

namespace {

std::string tag_name(ValueTag tag) {
  switch (tag) {
    case ValueTag::Boolean: return "boolean";
    case ValueTag::Cost: return "cost";
    case ValueTag::Hundredths: return "hundredths";
    case ValueTag::Probability: return "probability";
    case ValueTag::Pair: return "pair";
  }
  return "?";
}

[[noreturn]] void mismatch(const SemiringInstance& s, const SemiringValue& v) {
  throw SemiringError("value " + v.to_string() + " (" + tag_name(v.tag()) + ") does not belong to the " + s.name() +
                      " semiring");
}

std::string two_places(int hundredths) {
  std::string out = std::to_string(hundredths / 100) + ".";
  int frac = hundredths % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

// Parses [0-9]+ or [0-9]+.[0-9]{1,2} into hundredths.
bool parse_hundredths(std::string_view text, int& out) {
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() || whole.size() > 3) return false;
  if (dot != std::string_view::npos && (frac.empty() || frac.size() > 2)) return false;
  int w = 0;
  for (char c : whole) {
    if (c < '0' || c > '9') return false;
    w = w * 10 + (c - '0');
  }
  int f = 0;
  for (char c : frac) {
    if (c < '0' || c > '9') return false;
    f = f * 10 + (c - '0');
  }
  if (frac.size() == 1) f *= 10;
  out = w * 100 + f;
  return true;
}

}  // namespace

SemiringValue SemiringValue::boolean(bool v) { return SemiringValue(v); }

SemiringValue SemiringValue::cost(std::uint64_t v) { return SemiringValue(CostRep{v}); }

SemiringValue SemiringValue::infinite_cost() { return SemiringValue(CostRep{kInfiniteCost}); }

SemiringValue SemiringValue::hundredths(int v) {
  if (v < 0 || v > 100) throw SemiringError("fixed-point value out of [0,100]: " + std::to_string(v));
  return SemiringValue(HundredthsRep{v});
}

SemiringValue SemiringValue::probability(Rational v) {
  if (v < 0 || v > 1) throw SemiringError("probability out of [0,1]");
  return SemiringValue(std::move(v));
}

SemiringValue SemiringValue::probability_hundredths(int v) {
  if (v < 0 || v > 100) throw SemiringError("fixed-point value out of [0,100]: " + std::to_string(v));
  return SemiringValue(Rational(v, 100));
}

SemiringValue SemiringValue::pair(SemiringValue first, SemiringValue second) {
  return SemiringValue(std::make_shared<const std::pair<SemiringValue, SemiringValue>>(std::move(first), std::move(second)));
}

ValueTag SemiringValue::tag() const { return static_cast<ValueTag>(rep_.index()); }

bool SemiringValue::as_bool() const {
  if (const auto* v = std::get_if<bool>(&rep_)) return *v;
  throw SemiringError("not a boolean value: " + to_string());
}

std::uint64_t SemiringValue::as_cost() const {
  if (const auto* v = std::get_if<CostRep>(&rep_)) return v->value;
  throw SemiringError("not a cost value: " + to_string());
}

int SemiringValue::as_hundredths() const {
  if (const auto* v = std::get_if<HundredthsRep>(&rep_)) return v->value;
  throw SemiringError("not a fixed-point value: " + to_string());
}

const Rational& SemiringValue::as_probability() const {
  if (const auto* v = std::get_if<Rational>(&rep_)) return *v;
  throw SemiringError("not a probability value: " + to_string());
}

const SemiringValue& SemiringValue::first() const {
  if (const auto* v = std::get_if<PairRep>(&rep_)) return (*v)->first;
  throw SemiringError("not a pair value: " + to_string());
}

const SemiringValue& SemiringValue::second() const {
  if (const auto* v = std::get_if<PairRep>(&rep_)) return (*v)->second;
  throw SemiringError("not a pair value: " + to_string());
}

std::string SemiringValue::to_string() const {
  switch (tag()) {
    case ValueTag::Boolean: return std::get<bool>(rep_) ? "true" : "false";
    case ValueTag::Cost: {
      auto c = std::get<CostRep>(rep_).value;
      return c == kInfiniteCost ? "inf" : std::to_string(c);
    }
    case ValueTag::Hundredths: return two_places(std::get<HundredthsRep>(rep_).value);
    case ValueTag::Probability: {
      const Rational& p = std::get<Rational>(rep_);
      Rational scaled = p * 100;
      if (denominator(scaled) == 1) return two_places(static_cast<int>(numerator(scaled)));
      std::ostringstream os;
      os << numerator(p) << "/" << denominator(p);
      return os.str();
    }
    case ValueTag::Pair: {
      const auto& p = *std::get<PairRep>(rep_);
      return "(" + p.first.to_string() + "," + p.second.to_string() + ")";
    }
  }
  return "?";
}

bool operator==(const SemiringValue& a, const SemiringValue& b) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case ValueTag::Boolean: return a.as_bool() == b.as_bool();
    case ValueTag::Cost: return a.as_cost() == b.as_cost();
    case ValueTag::Hundredths: return a.as_hundredths() == b.as_hundredths();
    case ValueTag::Probability: return a.as_probability() == b.as_probability();
    case ValueTag::Pair: return a.first() == b.first() && a.second() == b.second();
  }
  return false;
}

bool operator<(const SemiringValue& a, const SemiringValue& b) {
  if (a.tag() != b.tag()) return a.tag() < b.tag();
  switch (a.tag()) {
    case ValueTag::Boolean: return a.as_bool() < b.as_bool();
    case ValueTag::Cost: return a.as_cost() < b.as_cost();
    case ValueTag::Hundredths: return a.as_hundredths() < b.as_hundredths();
    case ValueTag::Probability: return a.as_probability() < b.as_probability();
    case ValueTag::Pair:
      if (a.first() < b.first()) return true;
      if (b.first() < a.first()) return false;
      return a.second() < b.second();
  }
  return false;
}

std::string_view to_string(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::Weighted: return "weighted";
    case SemiringKind::Fuzzy: return "fuzzy";
    case SemiringKind::Probabilistic: return "probabilistic";
    case SemiringKind::Product: return "product";
  }
  return "?";
}

SemiringInstance SemiringInstance::make(SemiringKind kind) {
  if (kind == SemiringKind::Product) throw SemiringError("a product semiring needs two component instances");
  return SemiringInstance(kind);
}

SemiringInstance SemiringInstance::product(SemiringInstance first, SemiringInstance second) {
  SemiringInstance s(SemiringKind::Product);
  s.first_ = std::make_shared<const SemiringInstance>(std::move(first));
  s.second_ = std::make_shared<const SemiringInstance>(std::move(second));
  return s;
}

const SemiringInstance& SemiringInstance::first() const {
  if (!first_) throw SemiringError("not a product semiring");
  return *first_;
}

const SemiringInstance& SemiringInstance::second() const {
  if (!second_) throw SemiringError("not a product semiring");
  return *second_;
}

bool SemiringInstance::accepts(const SemiringValue& v) const {
  switch (kind_) {
    case SemiringKind::Boolean: return v.tag() == ValueTag::Boolean;
    case SemiringKind::Weighted: return v.tag() == ValueTag::Cost;
    case SemiringKind::Fuzzy: return v.tag() == ValueTag::Hundredths;
    case SemiringKind::Probabilistic: return v.tag() == ValueTag::Probability;
    case SemiringKind::Product:
      return v.tag() == ValueTag::Pair && first_->accepts(v.first()) && second_->accepts(v.second());
  }
  return false;
}

void SemiringInstance::require(const SemiringValue& v) const {
  if (!accepts(v)) mismatch(*this, v);
}

SemiringValue SemiringInstance::plus(const SemiringValue& a, const SemiringValue& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case SemiringKind::Boolean: return SemiringValue::boolean(a.as_bool() || b.as_bool());
    case SemiringKind::Weighted: return SemiringValue::cost(std::min(a.as_cost(), b.as_cost()));
    case SemiringKind::Fuzzy: return SemiringValue::hundredths(std::max(a.as_hundredths(), b.as_hundredths()));
    case SemiringKind::Probabilistic:
      return SemiringValue::probability(std::max(a.as_probability(), b.as_probability()));
    case SemiringKind::Product:
      return SemiringValue::pair(first_->plus(a.first(), b.first()), second_->plus(a.second(), b.second()));
  }
  return a;
}

SemiringValue SemiringInstance::times(const SemiringValue& a, const SemiringValue& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case SemiringKind::Boolean: return SemiringValue::boolean(a.as_bool() && b.as_bool());
    case SemiringKind::Weighted: {
      std::uint64_t x = a.as_cost();
      std::uint64_t y = b.as_cost();
      if (x == SemiringValue::kInfiniteCost || y == SemiringValue::kInfiniteCost) return SemiringValue::infinite_cost();
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(x, y, &sum) || sum == SemiringValue::kInfiniteCost) {
        throw SemiringError("cost overflow");
      }
      return SemiringValue::cost(sum);
    }
    case SemiringKind::Fuzzy: return SemiringValue::hundredths(std::min(a.as_hundredths(), b.as_hundredths()));
    case SemiringKind::Probabilistic: return SemiringValue::probability(a.as_probability() * b.as_probability());
    case SemiringKind::Product:
      return SemiringValue::pair(first_->times(a.first(), b.first()), second_->times(a.second(), b.second()));
  }
  return a;
}

SemiringValue SemiringInstance::bottom() const {
  switch (kind_) {
    case SemiringKind::Boolean: return SemiringValue::boolean(false);
    case SemiringKind::Weighted: return SemiringValue::infinite_cost();
    case SemiringKind::Fuzzy: return SemiringValue::hundredths(0);
    case SemiringKind::Probabilistic: return SemiringValue::probability(0);
    case SemiringKind::Product: return SemiringValue::pair(first_->bottom(), second_->bottom());
  }
  return {};
}

SemiringValue SemiringInstance::top() const {
  switch (kind_) {
    case SemiringKind::Boolean: return SemiringValue::boolean(true);
    case SemiringKind::Weighted: return SemiringValue::cost(0);
    case SemiringKind::Fuzzy: return SemiringValue::hundredths(100);
    case SemiringKind::Probabilistic: return SemiringValue::probability(1);
    case SemiringKind::Product: return SemiringValue::pair(first_->top(), second_->top());
  }
  return {};
}

bool SemiringInstance::leq(const SemiringValue& a, const SemiringValue& b) const { return plus(a, b) == b; }

bool SemiringInstance::lt(const SemiringValue& a, const SemiringValue& b) const { return leq(a, b) && !(a == b); }

SemiringValue SemiringInstance::combine(std::span<const SemiringValue> values) const {
  SemiringValue acc = top();
  for (const auto& v : values) acc = times(acc, v);
  return acc;
}

SemiringValue SemiringInstance::parse(std::string_view text) const {
  auto fail = [&]() -> SemiringError {
    return SemiringError("cannot parse '" + std::string(text) + "' as a " + name() + " value");
  };
  switch (kind_) {
    case SemiringKind::Boolean:
      if (text == "true") return SemiringValue::boolean(true);
      if (text == "false") return SemiringValue::boolean(false);
      throw fail();
    case SemiringKind::Weighted: {
      if (text == "inf") return SemiringValue::infinite_cost();
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || v == SemiringValue::kInfiniteCost) {
        throw fail();
      }
      return SemiringValue::cost(v);
    }
    case SemiringKind::Fuzzy:
    case SemiringKind::Probabilistic: {
      int h = 0;
      if (!parse_hundredths(text, h) || h > 100) throw fail();
      return kind_ == SemiringKind::Fuzzy ? SemiringValue::hundredths(h) : SemiringValue::probability_hundredths(h);
    }
    case SemiringKind::Product: throw SemiringError("product semiring values have no textual form");
  }
  throw fail();
}

std::string SemiringInstance::name() const {
  if (kind_ == SemiringKind::Product) return "product(" + first_->name() + "," + second_->name() + ")";
  return std::string(to_string(kind_));
}

bool operator==(const SemiringInstance& a, const SemiringInstance& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SemiringKind::Product) return true;
  return *a.first_ == *b.first_ && *a.second_ == *b.second_;
}

SemiringInstance make_instance(SemiringKind kind) { return SemiringInstance::make(kind); }

SemiringInstance make_product(SemiringInstance first, SemiringInstance second) {
  return SemiringInstance::product(std::move(first), std::move(second));
}

}  // namespace argcsp
