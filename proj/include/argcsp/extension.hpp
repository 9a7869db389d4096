#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

namespace argcsp {

/// Dense argument index in 0..n-1.
using ArgumentId = std::uint32_t;

/// A subset of 0..n-1 kept as a packed bitset, so set equality is word
/// equality. Ordering is lexicographic on the ascending member lists, which
/// places the empty set first.
class Extension {
 public:
  Extension() = default;
  explicit Extension(std::size_t universe);
  Extension(std::size_t universe, std::initializer_list<ArgumentId> members);
  static Extension from_members(std::size_t universe, const std::vector<ArgumentId>& members);
  static Extension full(std::size_t universe);
  /// Bits of `mask` for universes of at most 64 elements.
  static Extension from_mask(std::size_t universe, std::uint64_t mask);

  [[nodiscard]] std::size_t universe() const { return universe_; }
  [[nodiscard]] bool contains(ArgumentId a) const;
  void insert(ArgumentId a);
  void erase(ArgumentId a);
  void set(ArgumentId a, bool value) { value ? insert(a) : erase(a); }
  [[nodiscard]] Extension with(ArgumentId a) const;

  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] std::vector<ArgumentId> members() const;

  [[nodiscard]] bool is_subset_of(const Extension& other) const;
  [[nodiscard]] bool is_strict_subset_of(const Extension& other) const {
    return is_subset_of(other) && !(*this == other);
  }
  Extension& operator|=(const Extension& other);
  Extension& operator&=(const Extension& other);
  friend Extension operator|(Extension a, const Extension& b) { return a |= b; }
  friend Extension operator&(Extension a, const Extension& b) { return a &= b; }

  friend bool operator==(const Extension& a, const Extension& b) = default;
  friend bool operator<(const Extension& a, const Extension& b);

 private:
  void check(ArgumentId a) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Deduplicated, canonically ordered collection of extensions.
class ExtensionSet {
 public:
  using const_iterator = std::set<Extension>::const_iterator;

  ExtensionSet() = default;
  ExtensionSet(std::initializer_list<Extension> items) : items_(items) {}

  bool insert(Extension e) { return items_.insert(std::move(e)).second; }
  [[nodiscard]] bool contains(const Extension& e) const { return items_.count(e) != 0; }
  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] const_iterator begin() const { return items_.begin(); }
  [[nodiscard]] const_iterator end() const { return items_.end(); }
  [[nodiscard]] const Extension& front() const { return *items_.begin(); }
  [[nodiscard]] bool is_subset_of(const ExtensionSet& other) const;

  friend bool operator==(const ExtensionSet& a, const ExtensionSet& b) = default;

 private:
  std::set<Extension> items_;
};

}  // namespace argcsp
