#include "hornlearn/varset.hpp"

#include <bit>

#include "hornlearn/errors.hpp"

namespace hornlearn {

void throw_arity_mismatch(const char* where, std::size_t expected, std::size_t got) {
  throw ArityError(std::string(where) + ": arity mismatch (expected " +
                   std::to_string(expected) + ", got " + std::to_string(got) + ")");
}

VarSet::VarSet(std::size_t arity)
    : arity_(arity), words_((arity + kWordBits - 1) / kWordBits, 0) {}

VarSet VarSet::full(std::size_t arity) {
  VarSet s(arity);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_padding();
  return s;
}

VarSet VarSet::of(std::size_t arity, std::initializer_list<std::size_t> members) {
  return from_indices(arity, std::span<const std::size_t>(members.begin(), members.size()));
}

VarSet VarSet::from_indices(std::size_t arity, std::span<const std::size_t> members) {
  VarSet s(arity);
  for (auto v : members) s.insert(v);
  return s;
}

VarSet VarSet::from_bitstring(std::string_view bits) {
  VarSet s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.insert(i);
    } else if (bits[i] != '0') {
      throw FormulaError("bitstring may contain only '0' and '1': \"" + std::string(bits) + "\"");
    }
  }
  return s;
}

std::size_t VarSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VarSet::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool VarSet::all() const noexcept { return count() == arity_; }

bool VarSet::contains(std::size_t var) const {
  check_var(var);
  return (words_[var / kWordBits] >> (var % kWordBits)) & 1U;
}

VarSet& VarSet::insert(std::size_t var) {
  check_var(var);
  words_[var / kWordBits] |= std::uint64_t{1} << (var % kWordBits);
  return *this;
}

VarSet& VarSet::erase(std::size_t var) {
  check_var(var);
  words_[var / kWordBits] &= ~(std::uint64_t{1} << (var % kWordBits));
  return *this;
}

bool VarSet::is_subset_of(const VarSet& other) const {
  check_same_arity(other, "VarSet::is_subset_of");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VarSet::is_strict_subset_of(const VarSet& other) const {
  return is_subset_of(other) && words_ != other.words_;
}

bool VarSet::intersects(const VarSet& other) const {
  check_same_arity(other, "VarSet::intersects");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VarSet& VarSet::operator|=(const VarSet& other) {
  check_same_arity(other, "VarSet::operator|");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VarSet& VarSet::operator&=(const VarSet& other) {
  check_same_arity(other, "VarSet::operator&");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VarSet& VarSet::operator-=(const VarSet& other) {
  check_same_arity(other, "VarSet::operator-");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VarSet VarSet::complement() const {
  VarSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_padding();
  return s;
}

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each_member(*this, [&](std::size_t v) { out.push_back(v); });
  return out;
}

std::size_t VarSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return arity_;
}

std::size_t VarSet::next(std::size_t var) const noexcept {
  std::size_t pos = var + 1;
  if (pos >= arity_) return arity_;
  std::size_t wi = pos / kWordBits;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (pos % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return arity_;
    w = words_[wi];
  }
}

std::string VarSet::to_bitstring() const {
  std::string s(arity_, '0');
  for_each_member(*this, [&](std::size_t v) { s[v] = '1'; });
  return s;
}

bool lex_less(const VarSet& a, const VarSet& b) {
  a.check_same_arity(b, "lex_less");
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) == 0;
    }
  }
  return false;
}

std::size_t VarSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ arity_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void VarSet::check_var(std::size_t var) const {
  if (var >= arity_)
    throw ArityError("variable index " + std::to_string(var) + " out of range for arity " +
                     std::to_string(arity_));
}

void VarSet::check_same_arity(const VarSet& other, const char* where) const {
  if (arity_ != other.arity_) throw_arity_mismatch(where, arity_, other.arity_);
}

void VarSet::clear_padding() noexcept {
  if (arity_ % kWordBits != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (arity_ % kWordBits)) - 1;
}

}  // namespace hornlearn
