#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfs/lens_norm.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

// Boundary slope [c_i] = lambda [h_i] + mu [v_i] of a horizontal piece on T_i.
struct SlopePair {
  Int lambda = 1;
  Int mu = 0;
  friend auto operator<=>(const SlopePair&, const SlopePair&) = default;
};

// Parameters ((lambda_i, mu_i))_i of a pseudo-horizontal surface; lam is the
// lcm of the lambdas (the covering degree over the base).
struct PHParams {
  std::array<SlopePair, 3> pairs;
  Int lam = 1;

  // Computes lam. Throws InvalidInput when some lambda <= 0.
  static PHParams make(const std::array<SlopePair, 3>& pairs);
  friend auto operator<=>(const PHParams&, const PHParams&) = default;
};

enum class PHFailure {
  none,
  nonpositive_lambda,
  not_coprime,        // gcd(lambda_i, mu_i) != 1
  slope_sum_nonzero,  // sum mu_i / lambda_i != 0
  parity,             // none of the three parity patterns
  lcm_restriction,    // lambda_i != lam and (lambda_i, mu_i) != (alpha_i, beta_i)
  congruence,         // lambda_i - alpha_i or mu_i - beta_i odd
  orientable,         // every piece is a meridian disk family
};

std::string_view failure_name(PHFailure f);

struct Existence {
  PHFailure reason = PHFailure::none;
  explicit operator bool() const noexcept { return reason == PHFailure::none; }
};

// Existence criterion for a pseudo-horizontal surface with the given
// parameters; reports the first failed condition.
Existence ph_exists(const SeifertPresentation& m, const PHParams& p);

// The slope of c_i seen from the solid torus R_i:
//   (mu_i alpha_i - lambda_i beta_i) [l_i] + (lambda_i delta_i - mu_i gamma_i) [m_i].
LensCurve torus_curve(const FiberMatrix& f, const SlopePair& s);

// 2 + lam (1 - sum 1/lambda_i) + sum_i N(torus_curve_i). Throws InvalidInput
// if ph_exists fails.
Int ph_genus(const SeifertPresentation& m, const PHParams& p);

// The Z2 class carried by the surface. Throws InvalidInput when H_2 is
// trivial or the parameters are not realisable.
Z2Class ph_class(const SeifertPresentation& m, const PHParams& p);

// V_{i,j}: a vertical annulus between T_i and T_j capped in R_i and R_j.
// Indices are 0-based.
struct VerticalSurface {
  std::size_t i = 0;
  std::size_t j = 1;
  friend auto operator<=>(const VerticalSurface&, const VerticalSurface&) = default;
};

struct SurfaceReport {
  std::variant<VerticalSurface, PHParams> kind;
  Int genus = 0;
  Z2Class z2class;
  Int norm_contribution = 0;  // max(0, genus - 2)

  bool is_vertical() const noexcept { return std::holds_alternative<VerticalSurface>(kind); }
  std::string_view kind_name() const noexcept { return is_vertical() ? "vertical" : "horizontal"; }
  std::string describe() const;
  friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

SurfaceReport make_report(std::variant<VerticalSurface, PHParams> kind, Int genus, Z2Class cls);

// Pseudo-horizontal report with genus and class filled in.
SurfaceReport horizontal_report(const SeifertPresentation& m, const PHParams& p);

// One V_{i,j} per pair of even multiplicities; genus N(a_i,b_i) + N(a_j,b_j).
std::vector<SurfaceReport> vertical_surfaces(const SeifertPresentation& m);

// Relabel fibers: result fiber k is input fiber perm[k].
PHParams permute(const PHParams& p, const std::array<std::size_t, 3>& perm);
SurfaceReport permute(const SurfaceReport& r, const std::array<std::size_t, 3>& perm);

}  // namespace sfs
