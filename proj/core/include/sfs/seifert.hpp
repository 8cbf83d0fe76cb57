#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfs/checked.hpp"

namespace sfs {

// Gluing matrix of one exceptional fiber:
//   [m]   (alpha beta ) [h]
//   [l] = (gamma delta) [v],   alpha * delta - beta * gamma = 1.
struct FiberMatrix {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;
  Int delta = 0;

  Int det() const { return sub(mul(alpha, delta), mul(beta, gamma)); }
  friend bool operator==(const FiberMatrix&, const FiberMatrix&) = default;
};

// Completes (alpha, beta) to a determinant-one matrix. The canonical choice
// is the delta in [1, |beta|] with alpha * delta = 1 (mod beta).
FiberMatrix complete_matrix(Int alpha, Int beta);

using FiberPair = std::pair<Int, Int>;  // (alpha, beta)

// S^2((a1,b1),(a2,b2),(a3,b3)) with three exceptional fibers and
// sum(b/a) != 0. Fiber order is the caller's.
class SeifertPresentation {
 public:
  // Validates every fiber (alpha >= 2, coprime, det 1) and smallness.
  explicit SeifertPresentation(const std::array<FiberMatrix, 3>& fibers);
  static SeifertPresentation from_pairs(const std::array<FiberPair, 3>& pairs);

  const std::array<FiberMatrix, 3>& fibers() const noexcept { return fibers_; }
  const FiberMatrix& fiber(std::size_t i) const { return fibers_.at(i); }
  std::array<FiberPair, 3> pairs() const;
  Fraction euler_sum() const;  // sum beta_i / alpha_i

  friend bool operator==(const SeifertPresentation&, const SeifertPresentation&) = default;

 private:
  std::array<FiberMatrix, 3> fibers_;
};

enum class Notation { martelli, hatcher, orlik };

std::optional<Notation> notation_from_name(std::string_view name);
std::string_view notation_name(Notation n);

// Accepts
//   Martelli  S2((a,b),(a,b),(a,b))
//   Hatcher   M(+0,0; b/a, b/a, b/a)
//   Orlik     [e; (a,b'),(a,b'),(a,b')]   with 0 < b' < a
// detected from the leading token unless `forced` is set. Orlik's e is
// absorbed into fiber 1. Throws ParseError on syntax and InvalidInput on
// semantic violations.
SeifertPresentation parse_presentation(std::string_view text,
                                       std::optional<Notation> forced = std::nullopt);

std::string format_presentation(const SeifertPresentation& m, Notation n);

struct OrlikForm {
  Int e = 0;
  std::array<FiberPair, 3> triples;  // (alpha, beta') with 0 < beta' < alpha

  friend bool operator==(const OrlikForm&, const OrlikForm&) = default;
};

OrlikForm to_orlik_normal_form(const SeifertPresentation& m);
SeifertPresentation from_orlik(const OrlikForm& f);

// Stable key: the Orlik normal form string.
std::string canonical_key(const SeifertPresentation& m);

// All alpha odd and sum beta even: a paired fiber move making every beta
// even. Throws InvalidInput otherwise.
SeifertPresentation normalize_even_betas(const SeifertPresentation& m);

enum class HomologyCase : std::uint8_t { trivial, cyclic_vertical, cyclic_two_even, klein_four };

std::string_view homology_case_name(HomologyCase c);
std::optional<HomologyCase> homology_case_from_name(std::string_view name);

// A nonzero class of H_2(M; Z2), labelled by its intersection parities
// with h_1, h_2, h_3. In the cyclic_vertical case every [h_i] vanishes and
// the class is the one dual to [v]; it is labelled (1, 1, 1) there.
struct Z2Class {
  HomologyCase tag = HomologyCase::trivial;
  std::array<std::uint8_t, 3> parities{};

  std::string label() const;
  friend auto operator<=>(const Z2Class&, const Z2Class&) = default;
};

struct HomologyStructure {
  HomologyCase case_tag = HomologyCase::trivial;
  std::vector<Z2Class> nonzero_classes;
};

HomologyStructure homology_structure(const SeifertPresentation& m);

// Reorders the fibers: result fiber k is input fiber perm[k].
SeifertPresentation permute(const SeifertPresentation& m, const std::array<std::size_t, 3>& perm);
Z2Class permute(const Z2Class& c, const std::array<std::size_t, 3>& perm);

}  // namespace sfs
