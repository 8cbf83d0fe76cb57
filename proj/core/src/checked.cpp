#include "sfs/checked.hpp"

#include <limits>
#include <numeric>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw InternalError(std::string("integer overflow in ") + op);
}

}  // namespace

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) overflow("neg");
  return -a;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw InternalError("division by zero");
  if (a == std::numeric_limits<Int>::min() && b == -1) overflow("div");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) {
  if (b == 0) throw InternalError("division by zero");
  Int r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

Int gcd(Int a, Int b) {
  if (a == std::numeric_limits<Int>::min() || b == std::numeric_limits<Int>::min())
    overflow("gcd");
  return std::gcd(a, b);
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int r = mul(a / g, b);
  return r < 0 ? neg(r) : r;
}

Fraction Fraction::of(Int num, Int den) {
  if (den == 0) throw InternalError("fraction with zero denominator");
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Fraction{num, den};
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  Int g = gcd(a.den, b.den);
  Int den = mul(a.den / g, b.den);
  Int num = add(mul(a.num, b.den / g), mul(b.num, a.den / g));
  return Fraction::of(num, den);
}

Fraction operator-(const Fraction& a) { return Fraction{neg(a.num), a.den}; }

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace sfs
