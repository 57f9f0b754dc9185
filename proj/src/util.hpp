#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace md {

// Thrown when a search exceeds its configured node budget.  A budget hit is
// a distinct outcome, never silently converted into a verdict.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr uint64_t bit(int i) { return uint64_t{1} << i; }

inline constexpr uint64_t low_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

inline int popcount64(uint64_t x) { return std::popcount(x); }

// Calls fn(i) for every set bit of mask, lowest first.
template <typename Fn>
inline void for_each_bit(uint64_t mask, Fn&& fn) {
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    fn(i);
  }
}

inline long long binom2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

}  // namespace md
