#include "sfs/lens_norm.hpp"

#include <algorithm>
#include <string>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

std::string show(const LensCurve& c) {
  return "(" + std::to_string(c.twok) + ", " + std::to_string(c.q) + ")";
}

}  // namespace

void validate(const LensCurve& c) {
  if (!is_even(c.twok)) throw InvalidInput("lens curve " + show(c) + ": first entry must be even");
  if (gcd(c.twok, c.q) != 1) throw InvalidInput("lens curve " + show(c) + ": not coprime");
}

LensCurve normalize_lens(LensCurve c) {
  validate(c);
  if (c.twok == 0) return {0, 1};
  if (c.twok < 0) {
    c.twok = neg(c.twok);
    c.q = neg(c.q);
  }
  c.q = floor_mod(c.q, c.twok);
  if (c.q > c.twok / 2) c.q = c.twok - c.q;
  return c;
}

CFDigits CFDigits::from_digits(std::vector<Int> digits) {
  if (digits.empty()) throw InvalidInput("empty continued fraction");
  if (digits.size() >= 2 && digits.back() == 1) {
    digits.pop_back();
    digits.back() = add(digits.back(), 1);
  }
  if (digits[0] < 0) throw InvalidInput("continued fraction: a0 must be >= 0");
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] <= 0) throw InvalidInput("continued fraction: partial quotients must be positive");
  return CFDigits(std::move(digits));
}

Fraction CFDigits::reconstruct() const {
  // h/k convergent recurrence, evaluated from the top.
  Int h_prev = 1, h = digits_[0];
  Int k_prev = 0, k = 1;
  for (std::size_t i = 1; i < digits_.size(); ++i) {
    Int h_next = add(mul(digits_[i], h), h_prev);
    Int k_next = add(mul(digits_[i], k), k_prev);
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return Fraction::of(h, k);
}

std::vector<Int> euclid_quotients(Int a, Int b) {
  std::vector<Int> out;
  while (b != 0) {
    out.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  return out;
}

CFDigits cf_expand(Int numerator, Int denominator) {
  if (numerator <= 0 || denominator <= 0)
    throw InvalidInput("cf_expand: numerator and denominator must be positive");
  if (gcd(numerator, denominator) != 1) throw InvalidInput("cf_expand: not coprime");
  return CFDigits::from_digits(euclid_quotients(numerator, denominator));
}

std::vector<Int> skip_sequence(const std::vector<Int>& digits) {
  std::vector<Int> b;
  b.reserve(digits.size());
  Int partial = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    bool skip = i > 0 && b[i - 1] == digits[i - 1] && is_even(partial);
    b.push_back(skip ? 0 : digits[i]);
    partial = add(partial, b.back());
  }
  return b;
}

Int skip_sum(const CFDigits& digits) {
  Int total = 0;
  for (Int v : skip_sequence(digits.digits())) total = add(total, v);
  if (!is_even(total)) throw InvalidInput("skip sum is odd; digits do not come from a lens curve 2k/q");
  return total / 2;
}

Int n_genus(const LensCurve& c) {
  LensCurve n = normalize_lens(c);
  if (n.twok == 0) return 0;
  return skip_sum(cf_expand(n.twok, n.q));
}

Int n_genus_oracle(const LensCurve& c) {
  LensCurve cur = normalize_lens(c);
  Int steps = 0;
  while (cur.twok != 0) {
    const Int k = cur.twok / 2;
    if (cur.q == 1) return add(steps, k);
    // Prefer 2km - Qq = +1, i.e. Qq = -1 (mod 2k).
    Int found_q = 0, found_m = 0;
    for (int sign : {+1, -1}) {
      for (Int big_q = 1; big_q < k && found_q == 0; ++big_q) {
        Int rhs = add(mul(big_q, cur.q), sign);  // 2km = Qq + sign
        if (floor_mod(rhs, cur.twok) == 0) {
          found_q = big_q;
          found_m = rhs / cur.twok;
        }
      }
      if (found_q != 0) break;
    }
    if (found_q == 0) throw InternalError("n_genus_oracle: no (Q, m) in range for " + show(cur));
    cur = normalize_lens({mul(2, k - found_q), sub(cur.q, mul(2, found_m))});
    steps = add(steps, 1);
  }
  return steps;
}

bool n_lower_bound_reached(const LensCurve& c, const LensCurve& target) {
  validate(c);
  if (normalize_lens(target) != target) throw InvalidInput("n_lower_bound_reached: target must be normalized");
  if (target.twok == 0) return false;
  LensCurve n = normalize_lens(c);
  if (n.twok == 0) return false;
  const CFDigits t = cf_expand(target.twok, target.q);
  const CFDigits d = cf_expand(n.twok, n.q);
  if (t.size() >= d.size()) return false;
  return std::equal(t.digits().begin(), t.digits().end(), d.digits().begin());
}

}  // namespace sfs
