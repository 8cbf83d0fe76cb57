#pragma once

#include <vector>

#include "sfs/checked.hpp"

namespace sfs {

// The boundary slope 2k[l] + q[m] on a solid torus, equivalently the lens
// space L(2k, q). Valid when twok is even and gcd(twok, q) = 1.
struct LensCurve {
  Int twok = 0;
  Int q = 1;

  friend bool operator==(const LensCurve&, const LensCurve&) = default;
};

// Throws InvalidInput unless twok is even and gcd(twok, q) = 1.
void validate(const LensCurve& c);

// Canonical representative: (0, 1), or k > 0 with 0 < q <= k (q == k only
// for (2, 1)). Applies sign flip, then q mod 2k, then q -> 2k - q.
LensCurve normalize_lens(LensCurve c);

// Regular continued fraction [a0; a1, ..., an] with a0 >= 0, ai > 0 and
// an > 1 when n >= 1.
class CFDigits {
 public:
  // Canonicalises a trailing 1 ([..., a, 1] -> [..., a + 1]) and checks
  // the sign constraints.
  static CFDigits from_digits(std::vector<Int> digits);

  const std::vector<Int>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Int operator[](std::size_t i) const { return digits_[i]; }

  // numerator / denominator, in lowest terms.
  Fraction reconstruct() const;

  friend bool operator==(const CFDigits&, const CFDigits&) = default;

 private:
  explicit CFDigits(std::vector<Int> d) : digits_(std::move(d)) {}
  std::vector<Int> digits_;
};

// Continued fraction of numerator/denominator; both positive and coprime.
CFDigits cf_expand(Int numerator, Int denominator);

// Euclidean quotients of a/b for a >= 0, b > 0 without a coprimality
// requirement. Last quotient is > 1 unless the list has one entry.
std::vector<Int> euclid_quotients(Int a, Int b);

// The skip rule: b0 = a0; bi = 0 when b(i-1) = a(i-1) and the partial sum
// so far is even, otherwise bi = ai. No parity check on the total.
std::vector<Int> skip_sequence(const std::vector<Int>& digits);

// Half the sum of the skip sequence. Throws InvalidInput if that sum is odd.
Int skip_sum(const CFDigits& digits);

// Genus N(2k, q) of the incompressible one-sided surface in a solid torus
// bounded by the given slope. N(0, 1) = 0.
Int n_genus(const LensCurve& c);

// Same value through the Bredon-Wood recursion
//   N(2k, 1) = k,  N(2k, q) = N(2(k - Q), q - 2m) + 1,  2km - Qq = +-1,
// renormalising after each step. Kept independent of cf_expand.
Int n_genus_oracle(const LensCurve& c);

// True iff the digits of the (normalized) target form a strict prefix of
// the digits of normalize_lens(c); then n_genus(c) >= n_genus(target).
// A false answer says nothing.
bool n_lower_bound_reached(const LensCurve& c, const LensCurve& target);

}  // namespace sfs
