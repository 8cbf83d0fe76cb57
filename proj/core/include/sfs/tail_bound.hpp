#pragma once

#include <optional>

#include "sfs/seifert.hpp"

namespace sfs {

// For a fixed lambda, the slope seen from R_i as mu walks off in one
// direction is an affine family s -> s (A, C) + (U, V) up to the moves that
// leave N unchanged ((x, y) -> (x, y + t x), (x, -y), (-x, -y)). The family
// is reduced so that A > 0 and 0 < C <= A / 2, with s = direction * mu.
struct SlopeFamily {
  Int a = 0;
  Int c = 0;
  Int u = 0;
  Int v = 0;
  int direction = 1;

  // Representative of the slope at mu (equal N to torus_curve).
  std::pair<Int, Int> at(Int mu) const;
};

SlopeFamily slope_family(const FiberMatrix& f, Int lambda, int direction);

// Lower bound on N valid for every mu at or beyond `mu` in the family's
// direction, or nullopt when nothing is certified yet.
//
// Once y > 0 the ratio x / y moves monotonically towards A / C. If at `mu`
// it already lies in the interval of reals whose continued fraction starts
// with the digits of A / C (or the equivalent [..., a_n - 1, 1] form), every
// later ratio does too, and the digit following that prefix only grows. The
// skip rule applied to the prefix and that digit bounds N from below.
// Otherwise the bound is 1 as long as x > 0.
std::optional<Int> tail_lower_bound(const SlopeFamily& fam, Int mu);

}  // namespace sfs
