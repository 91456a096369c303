#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "pbci/error.hpp"

namespace pbci {

// Dense subset of {0, ..., n-1} for n <= 64, one bit per element.
class Subset {
 public:
  static constexpr std::size_t max_universe = 64;

  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe) {
    if (universe > max_universe) {
      throw CapExceeded("subset universe larger than 64 elements");
    }
  }
  Subset(std::size_t universe, std::uint64_t bits) : Subset(universe) {
    bits_ = bits & mask();
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    s.bits_ = s.mask();
    return s;
  }
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> xs) {
    Subset s(universe);
    for (auto x : xs) s.insert(x);
    return s;
  }
  template <typename Range>
  static Subset from_range(std::size_t universe, const Range& xs) {
    Subset s(universe);
    for (auto x : xs) s.insert(static_cast<std::size_t>(x));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(std::size_t x) const noexcept { return (bits_ >> x) & 1U; }
  void insert(std::size_t x) noexcept { bits_ |= std::uint64_t{1} << x; }
  void erase(std::size_t x) noexcept { bits_ &= ~(std::uint64_t{1} << x); }

  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == mask(); }
  bool subset_of(const Subset& o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  Subset operator|(const Subset& o) const noexcept { return raw(bits_ | o.bits_); }
  Subset operator&(const Subset& o) const noexcept { return raw(bits_ & o.bits_); }
  Subset complement() const noexcept { return raw(~bits_ & mask()); }
  Subset& operator|=(const Subset& o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }

  bool operator==(const Subset& o) const noexcept = default;

  // Canonical family order: by size, then lexicographically by the sorted
  // member lists.
  friend bool canonical_less(const Subset& a, const Subset& b) noexcept {
    if (a.count() != b.count()) return a.count() < b.count();
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return false;
  }

 private:
  std::uint64_t mask() const noexcept {
    return universe_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_) - 1;
  }
  Subset raw(std::uint64_t bits) const noexcept {
    Subset s;
    s.universe_ = universe_;
    s.bits_ = bits;
    return s;
  }

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

bool canonical_less(const Subset& a, const Subset& b) noexcept;

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL ^ s.universe());
  }
};

}  // namespace pbci
