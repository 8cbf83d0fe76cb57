#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfs/seifert.hpp"
#include "sfs/surfaces.hpp"

namespace sfs {

// Explicit limits for the mu sweeps.
//   mu_window        half-width of every mu sweep (default 64 * max alpha)
//   lambda_cap       hard ceiling on lambda; unset means "prune by genus only"
//   prefix_stop_run  consecutive certified mu values needed to close a
//                    sweep direction before the window edge
struct SearchBudget {
  Int mu_window = 64;
  std::optional<Int> lambda_cap;
  Int prefix_stop_run = 8;

  static SearchBudget defaults_for(const SeifertPresentation& m);
  void validate() const;  // throws InvalidInput on a nonpositive field
};

inline constexpr Int kNoCutoff = std::numeric_limits<Int>::max();

// Current pruning threshold: candidates whose genus lower bound exceeds it
// can be skipped.
using GenusCutoff = std::function<Int()>;
using CandidateSink = std::function<void(const PHParams&, Int genus)>;

struct StreamStatus {
  bool exhaustive = true;  // false iff a cap was hit without certification
  std::size_t emitted = 0;
};

// Case (1): lambda_1 = lambda_2 = lambda_3 = lambda odd; only when every
// alpha is odd. For each lambda only candidates that could be a minimum
// (genus <= min(cutoff, best genus at this lambda)) are emitted.
StreamStatus enumerate_case1(const SeifertPresentation& m, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink);

// Case (3) for one fixed fiber i: (lambda_i, mu_i) = (alpha_i, beta_i),
// lambda_j = lambda_k = p alpha_i with p >= 2. Emits every realisable
// candidate swept.
StreamStatus enumerate_case3(const SeifertPresentation& m, std::size_t i, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink);

// Case (3) for i = 1, 2, 3 in turn.
StreamStatus enumerate_case3(const SeifertPresentation& m, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink);

// Case (4): two fibers fixed at (alpha, beta) with alpha_i < alpha_j, the
// third slope forced by sum mu/lambda = 0. At most six candidates.
std::vector<PHParams> enumerate_case4(const SeifertPresentation& m);

struct ClassResult {
  Int min_genus = 0;
  Int norm = 0;  // max(0, min_genus - 2)
  SurfaceReport witness;
  bool exhaustive = true;
  std::optional<Int> min_vertical;
  std::optional<Int> min_horizontal;  // set only when certified by the search
  std::vector<SurfaceReport> witnesses;  // everything found at min_genus

  friend bool operator==(const ClassResult&, const ClassResult&) = default;
};

struct NormReport {
  std::string presentation;    // Martelli form as given
  std::string canonical_form;  // Orlik normal form
  HomologyCase homology = HomologyCase::trivial;
  bool exhaustive = true;
  std::map<Z2Class, ClassResult> per_class;

  friend bool operator==(const NormReport&, const NormReport&) = default;
};

// Minimal genus and Z2-Thurston norm of every nonzero class.
NormReport compute_norms(const SeifertPresentation& m, const SearchBudget& budget);
NormReport compute_norms(const SeifertPresentation& m);

}  // namespace sfs
