#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hornlearn {

/// A subset of the variables {0, ..., arity-1}.
///
/// The same value is read as an assignment (bit i is the truth value of
/// variable i) wherever an n-bit vector is expected, so moving between the
/// set view and the assignment view is the identity. Bitwise meet is set
/// intersection and the bitwise order is set inclusion.
///
/// Binary operations require equal arity and throw ArityError otherwise.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::size_t arity);

  static VarSet full(std::size_t arity);
  static VarSet of(std::size_t arity, std::initializer_list<std::size_t> members);
  static VarSet from_indices(std::size_t arity, std::span<const std::size_t> members);
  /// "10110": character i is variable i. Only '0' and '1' are accepted.
  static VarSet from_bitstring(std::string_view bits);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept;

  bool contains(std::size_t var) const;
  VarSet& insert(std::size_t var);
  VarSet& erase(std::size_t var);

  /// Inclusion, i.e. the bitwise order x <= y.
  bool is_subset_of(const VarSet& other) const;
  /// Strict inclusion, x < y.
  bool is_strict_subset_of(const VarSet& other) const;
  bool intersects(const VarSet& other) const;

  VarSet& operator|=(const VarSet& other);
  VarSet& operator&=(const VarSet& other);
  VarSet& operator-=(const VarSet& other);
  VarSet complement() const;

  friend VarSet operator|(VarSet a, const VarSet& b) { return a |= b; }
  friend VarSet operator&(VarSet a, const VarSet& b) { return a &= b; }
  friend VarSet operator-(VarSet a, const VarSet& b) { return a -= b; }

  bool operator==(const VarSet&) const = default;

  /// Members in increasing order.
  std::vector<std::size_t> indices() const;
  /// Smallest member, or arity() when empty.
  std::size_t first() const noexcept;
  /// Smallest member greater than `var`, or arity() when there is none.
  std::size_t next(std::size_t var) const noexcept;

  std::string to_bitstring() const;

  /// Total order: compares bitstrings lexicographically ('0' < '1').
  /// Not related to inclusion; used for canonical sorting.
  friend bool lex_less(const VarSet& a, const VarSet& b);

  std::size_t hash() const noexcept;

 private:
  static constexpr std::size_t kWordBits = 64;

  void check_var(std::size_t var) const;
  void check_same_arity(const VarSet& other, const char* where) const;
  void clear_padding() noexcept;

  std::size_t arity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Both readings share one representation.
using Assignment = VarSet;

template <typename Fn>
void for_each_member(const VarSet& set, Fn&& fn) {
  for (std::size_t v = set.first(); v < set.arity(); v = set.next(v)) fn(v);
}

}  // namespace hornlearn

template <>
struct std::hash<hornlearn::VarSet> {
  std::size_t operator()(const hornlearn::VarSet& s) const noexcept { return s.hash(); }
};
