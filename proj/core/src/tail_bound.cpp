#include "sfs/tail_bound.hpp"

#include <algorithm>

#include "sfs/errors.hpp"
#include "sfs/lens_norm.hpp"

namespace sfs {

namespace {

// ceil(sum b / 2) over the first `len` digits of `here`, plus the digit at
// position len when the skip rule keeps it. Later ratios share the prefix
// and their next digit is at least here[len], so the value bounds them too.
Int prefix_bound(const std::vector<Int>& here, std::size_t len) {
  const std::vector<Int> prefix(here.begin(), here.begin() + static_cast<std::ptrdiff_t>(len));
  const std::vector<Int> b = skip_sequence(prefix);
  Int total = 0;
  for (Int v : b) total = add(total, v);
  const bool next_skipped = len > 0 && b[len - 1] == prefix[len - 1] && is_even(total);
  if (here.size() > len && !next_skipped) total = add(total, here[len]);
  return (total + 1) / 2;
}

}  // namespace

std::pair<Int, Int> SlopeFamily::at(Int mu) const {
  const Int s = direction > 0 ? mu : neg(mu);
  return {add(mul(s, a), u), add(mul(s, c), v)};
}

SlopeFamily slope_family(const FiberMatrix& f, Int lambda, int direction) {
  // curve(mu) = mu (alpha, -gamma) + lambda (-beta, delta); for the negative
  // direction substitute mu = -s and negate both coordinates.
  SlopeFamily fam;
  fam.direction = direction > 0 ? 1 : -1;
  fam.a = f.alpha;
  Int c0 = neg(f.gamma);
  fam.u = mul(fam.direction, neg(mul(lambda, f.beta)));
  fam.v = mul(fam.direction, mul(lambda, f.delta));
  // y -> y + t x moves C into [0, A).
  Int c = floor_mod(c0, fam.a);
  Int t = (c - c0) / fam.a;
  fam.c = c;
  fam.v = add(fam.v, mul(t, fam.u));
  // y -> x - y puts C into (0, A/2].
  if (2 * fam.c > fam.a) {
    fam.c = fam.a - fam.c;
    fam.v = sub(fam.u, fam.v);
  }
  if (fam.c <= 0) throw InternalError("slope_family: degenerate slope direction");
  return fam;
}

std::optional<Int> tail_lower_bound(const SlopeFamily& fam, Int mu) {
  const auto [x, y] = fam.at(mu);
  if (x <= 0) return std::nullopt;
  const Int trivial = 1;
  // Target A / C = 2 is the slope (2, 1), whose N is 1 anyway.
  if (fam.a == 2 * fam.c || y <= 0) return trivial;

  const std::vector<Int> target = euclid_quotients(fam.a, fam.c);
  const std::vector<Int> here = euclid_quotients(x, y);
  const std::size_t n = target.size() - 1;
  if (here.size() < n + 1) return trivial;
  if (!std::equal(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(n), here.begin())) return trivial;

  if (here[n] == target[n]) return std::max(trivial, prefix_bound(here, n + 1));
  if (here[n] == target[n] - 1 && here.size() >= n + 3 && here[n + 1] == 1)
    return std::max(trivial, prefix_bound(here, n + 2));
  return trivial;
}

}  // namespace sfs
