#include "argcsp/extension.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace argcsp {

namespace {
constexpr std::size_t kWordBits = 64;
}

Extension::Extension(std::size_t universe) : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

Extension::Extension(std::size_t universe, std::initializer_list<ArgumentId> members) : Extension(universe) {
  for (auto a : members) insert(a);
}

Extension Extension::from_members(std::size_t universe, const std::vector<ArgumentId>& members) {
  Extension e(universe);
  for (auto a : members) e.insert(a);
  return e;
}

Extension Extension::full(std::size_t universe) {
  Extension e(universe);
  for (std::size_t a = 0; a < universe; ++a) e.insert(static_cast<ArgumentId>(a));
  return e;
}

Extension Extension::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw std::out_of_range("mask construction needs a universe of at most 64");
  Extension e(universe);
  if (universe == 0) return e;
  if (universe < kWordBits) mask &= (std::uint64_t{1} << universe) - 1;
  e.words_[0] = mask;
  return e;
}

void Extension::check(ArgumentId a) const {
  if (a >= universe_) {
    throw std::out_of_range("argument " + std::to_string(a) + " outside universe of " + std::to_string(universe_));
  }
}

bool Extension::contains(ArgumentId a) const {
  check(a);
  return (words_[a / kWordBits] >> (a % kWordBits)) & 1U;
}

void Extension::insert(ArgumentId a) {
  check(a);
  words_[a / kWordBits] |= std::uint64_t{1} << (a % kWordBits);
}

void Extension::erase(ArgumentId a) {
  check(a);
  words_[a / kWordBits] &= ~(std::uint64_t{1} << (a % kWordBits));
}

Extension Extension::with(ArgumentId a) const {
  Extension e = *this;
  e.insert(a);
  return e;
}

std::size_t Extension::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Extension::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<ArgumentId> Extension::members() const {
  std::vector<ArgumentId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<ArgumentId>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool Extension::is_subset_of(const Extension& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("extensions over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Extension& Extension::operator|=(const Extension& other) {
  if (universe_ != other.universe_) throw std::invalid_argument("extensions over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Extension& Extension::operator&=(const Extension& other) {
  if (universe_ != other.universe_) throw std::invalid_argument("extensions over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool operator<(const Extension& a, const Extension& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  // Both member lists agree below the lowest differing bit p. The side holding
  // p is smaller unless the other side has no members beyond p (then the other
  // side is a proper prefix).
  const std::size_t n = a.words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const unsigned p = static_cast<unsigned>(std::countr_zero(diff));
    auto has_member_above = [&](const std::vector<std::uint64_t>& w) {
      std::uint64_t rest = p == 63 ? 0 : w[i] & (~std::uint64_t{0} << (p + 1));
      if (rest != 0) return true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (w[j] != 0) return true;
      }
      return false;
    };
    const bool a_holds = (a.words_[i] >> p) & 1U;
    return a_holds ? has_member_above(b.words_) : !has_member_above(a.words_);
  }
  return false;
}

bool ExtensionSet::is_subset_of(const ExtensionSet& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](const Extension& e) { return other.contains(e); });
}

}  // namespace argcsp
