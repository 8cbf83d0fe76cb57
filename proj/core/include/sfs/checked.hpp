#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace sfs {

using Int = std::int64_t;

// Overflow-checked arithmetic. Every operation throws InternalError instead
// of wrapping.
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);

// Floor division (b != 0) and the remainder in [0, |b|).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

constexpr bool is_even(Int a) noexcept { return a % 2 == 0; }

// Exact rational in lowest terms with a positive denominator.
struct Fraction {
  Int num = 0;
  Int den = 1;

  static Fraction of(Int num, Int den);

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a);
  friend bool operator==(const Fraction&, const Fraction&) = default;
  bool is_zero() const noexcept { return num == 0; }
  std::string str() const;
};

}  // namespace sfs
