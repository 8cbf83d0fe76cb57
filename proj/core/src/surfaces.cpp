#include "sfs/surfaces.hpp"

#include <algorithm>
#include <sstream>

#include "sfs/errors.hpp"

namespace sfs {

PHParams PHParams::make(const std::array<SlopePair, 3>& pairs) {
  PHParams p{pairs, 1};
  for (const auto& s : pairs) {
    if (s.lambda <= 0) throw InvalidInput("pseudo-horizontal parameters need lambda > 0");
    p.lam = lcm(p.lam, s.lambda);
  }
  return p;
}

std::string_view failure_name(PHFailure f) {
  switch (f) {
    case PHFailure::none: return "none";
    case PHFailure::nonpositive_lambda: return "nonpositive_lambda";
    case PHFailure::not_coprime: return "not_coprime";
    case PHFailure::slope_sum_nonzero: return "slope_sum_nonzero";
    case PHFailure::parity: return "parity";
    case PHFailure::lcm_restriction: return "lcm_restriction";
    case PHFailure::congruence: return "congruence";
    case PHFailure::orientable: return "orientable";
  }
  return "?";
}

Existence ph_exists(const SeifertPresentation& m, const PHParams& p) {
  Int lam = 1;
  for (const auto& s : p.pairs) {
    if (s.lambda <= 0) return {PHFailure::nonpositive_lambda};
    lam = lcm(lam, s.lambda);
  }
  for (const auto& s : p.pairs)
    if (gcd(s.lambda, s.mu) != 1) return {PHFailure::not_coprime};

  Fraction total;
  for (const auto& s : p.pairs) total = total + Fraction::of(s.mu, s.lambda);
  if (!total.is_zero()) return {PHFailure::slope_sum_nonzero};

  int even_lambdas = 0;
  bool all_mu_odd = true;
  Int mu_sum = 0;
  for (const auto& s : p.pairs) {
    even_lambdas += is_even(s.lambda) ? 1 : 0;
    all_mu_odd = all_mu_odd && !is_even(s.mu);
    mu_sum = add(mu_sum, s.mu);
  }
  const bool parity_ok = (even_lambdas == 0 && is_even(mu_sum)) || even_lambdas == 2 ||
                         (even_lambdas == 3 && all_mu_odd);
  if (!parity_ok) return {PHFailure::parity};

  int meridians = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& f = m.fiber(i);
    const auto& s = p.pairs[i];
    const bool meridian = s.lambda == f.alpha && s.mu == f.beta;
    meridians += meridian ? 1 : 0;
    if (s.lambda != lam && !meridian) return {PHFailure::lcm_restriction};
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& f = m.fiber(i);
    const auto& s = p.pairs[i];
    if (!is_even(sub(s.lambda, f.alpha)) || !is_even(sub(s.mu, f.beta))) return {PHFailure::congruence};
  }
  if (meridians == 3) return {PHFailure::orientable};
  return {};
}

LensCurve torus_curve(const FiberMatrix& f, const SlopePair& s) {
  return {sub(mul(s.mu, f.alpha), mul(s.lambda, f.beta)), sub(mul(s.lambda, f.delta), mul(s.mu, f.gamma))};
}

Int ph_genus(const SeifertPresentation& m, const PHParams& p) {
  if (auto e = ph_exists(m, p); !e)
    throw InvalidInput("ph_genus: parameters fail the existence criterion (" +
                       std::string(failure_name(e.reason)) + ")");
  // Euler characteristic of the capped horizontal piece, kept exact:
  // lam (1 - sum 1/lambda_i) = lam - sum lam/lambda_i.
  Int branched = p.lam;
  for (const auto& s : p.pairs) {
    if (p.lam % s.lambda != 0) throw InternalError("ph_genus: lambda_i does not divide lcm");
    branched = sub(branched, p.lam / s.lambda);
  }
  Int genus = add(2, branched);
  for (std::size_t i = 0; i < 3; ++i) {
    const LensCurve c = torus_curve(m.fiber(i), p.pairs[i]);
    if (!is_even(c.twok) || gcd(c.twok, c.q) != 1)
      throw InternalError("ph_genus: boundary curve is not a valid lens slope");
    genus = add(genus, n_genus(c));
  }
  if (genus < 1) throw InternalError("ph_genus: nonpositive genus");
  return genus;
}

Z2Class ph_class(const SeifertPresentation& m, const PHParams& p) {
  const HomologyStructure h = homology_structure(m);
  if (h.case_tag == HomologyCase::trivial)
    throw InvalidInput("ph_class: H_2(M;Z2) is trivial, no pseudo-horizontal surface can exist");
  if (auto e = ph_exists(m, p); !e)
    throw InvalidInput("ph_class: parameters fail the existence criterion (" +
                       std::string(failure_name(e.reason)) + ")");
  if (h.case_tag != HomologyCase::klein_four) return h.nonzero_classes.front();
  Z2Class c{HomologyCase::klein_four, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    const Int times = mul(p.pairs[i].mu, p.lam / p.pairs[i].lambda);
    c.parities[i] = is_even(times) ? 0 : 1;
  }
  if (std::find(h.nonzero_classes.begin(), h.nonzero_classes.end(), c) == h.nonzero_classes.end())
    throw InternalError("ph_class: intersection parities do not name a nonzero class");
  return c;
}

SurfaceReport make_report(std::variant<VerticalSurface, PHParams> kind, Int genus, Z2Class cls) {
  return SurfaceReport{std::move(kind), genus, cls, std::max<Int>(0, genus - 2)};
}

SurfaceReport horizontal_report(const SeifertPresentation& m, const PHParams& p) {
  return make_report(p, ph_genus(m, p), ph_class(m, p));
}

std::vector<SurfaceReport> vertical_surfaces(const SeifertPresentation& m) {
  std::vector<SurfaceReport> out;
  const HomologyStructure h = homology_structure(m);
  if (h.case_tag != HomologyCase::cyclic_two_even && h.case_tag != HomologyCase::klein_four) return out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& fi = m.fiber(i);
      const auto& fj = m.fiber(j);
      if (!is_even(fi.alpha) || !is_even(fj.alpha)) continue;
      Z2Class c = h.nonzero_classes.front();
      if (h.case_tag == HomologyCase::klein_four) {
        c.parities = {0, 0, 0};
        c.parities[i] = c.parities[j] = 1;
      }
      const Int genus = add(n_genus({fi.alpha, fi.beta}), n_genus({fj.alpha, fj.beta}));
      out.push_back(make_report(VerticalSurface{i, j}, genus, c));
    }
  }
  return out;
}

std::string SurfaceReport::describe() const {
  std::ostringstream os;
  if (const auto* v = std::get_if<VerticalSurface>(&kind)) {
    os << "vertical V" << v->i + 1 << v->j + 1;
  } else {
    const auto& p = std::get<PHParams>(kind);
    os << "horizontal ";
    for (std::size_t i = 0; i < 3; ++i)
      os << (i ? "," : "") << '(' << p.pairs[i].lambda << ',' << p.pairs[i].mu << ')';
  }
  return os.str();
}

PHParams permute(const PHParams& p, const std::array<std::size_t, 3>& perm) {
  return PHParams{{p.pairs[perm[0]], p.pairs[perm[1]], p.pairs[perm[2]]}, p.lam};
}

SurfaceReport permute(const SurfaceReport& r, const std::array<std::size_t, 3>& perm) {
  SurfaceReport out = r;
  out.z2class = permute(r.z2class, perm);
  if (const auto* v = std::get_if<VerticalSurface>(&r.kind)) {
    std::array<std::size_t, 3> inverse{};
    for (std::size_t k = 0; k < 3; ++k) inverse[perm[k]] = k;
    std::size_t a = inverse[v->i], b = inverse[v->j];
    out.kind = VerticalSurface{std::min(a, b), std::max(a, b)};
  } else {
    out.kind = permute(std::get<PHParams>(r.kind), perm);
  }
  return out;
}

}  // namespace sfs
