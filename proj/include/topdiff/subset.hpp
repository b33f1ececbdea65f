#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace topdiff {

// Maximum ground-set size. Relations are stored as one 32-bit row per element.
inline constexpr std::size_t kMaxElements = 32;

// A subset of the ground set {0, ..., n-1}, stored as a bitmask.
class Subset {
 public:
  using mask_type = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(mask_type bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }
  static constexpr Subset singleton(std::size_t i) {
    return Subset(mask_type{1} << i);
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr Subset with(std::size_t i) const {
    return Subset(bits_ | (mask_type{1} << i));
  }
  constexpr Subset without(std::size_t i) const {
    return Subset(bits_ & ~(mask_type{1} << i));
  }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  // Members in ascending index order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (mask_type rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

 private:
  mask_type bits_ = 0;
};

}  // namespace topdiff
