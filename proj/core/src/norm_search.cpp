#include "sfs/norm_search.hpp"

#include <algorithm>
#include <numeric>

#include "sfs/errors.hpp"
#include "sfs/lens_norm.hpp"
#include "sfs/tail_bound.hpp"

namespace sfs {

namespace {

// Used only when a stream is run with no cutoff at all.
constexpr Int kFallbackLambdaCap = 4096;
constexpr std::size_t kMaxWitnesses = 32;

bool same_parity(Int a, Int b) { return is_even(a) == is_even(b); }

// Per-torus data for one lambda over mu in [-w, w]. value < 0 marks mu
// values that cannot occur (parity or coprimality).
struct TorusSweep {
  Int w = 0;
  std::vector<Int> value;
  Int window_min = kNoCutoff;

  Int at(Int mu) const { return value[static_cast<std::size_t>(mu + w)]; }
};

TorusSweep sweep_torus(const FiberMatrix& f, Int lambda, Int w) {
  TorusSweep t;
  t.w = w;
  t.value.assign(static_cast<std::size_t>(2 * w + 1), -1);
  for (Int mu = -w; mu <= w; ++mu) {
    if (!same_parity(mu, f.beta) || gcd(lambda, mu) != 1) continue;
    const Int n = n_genus(torus_curve(f, {lambda, mu}));
    t.value[static_cast<std::size_t>(mu + w)] = n;
    t.window_min = std::min(t.window_min, n);
  }
  return t;
}

// Bound on N for every mu beyond the window edge in `direction`, provided
// the certificate held on the last `run` positions up to the first mu
// outside the window.
std::optional<Int> edge_bound(const FiberMatrix& f, Int lambda, Int w, int direction, Int run) {
  if (run > w + 1) return std::nullopt;
  const SlopeFamily fam = slope_family(f, lambda, direction);
  std::optional<Int> last;
  for (Int d = w + 2 - run; d <= w + 1; ++d) {
    last = tail_lower_bound(fam, direction * d);
    if (!last) return std::nullopt;
  }
  return last;
}

}  // namespace

SearchBudget SearchBudget::defaults_for(const SeifertPresentation& m) {
  Int max_alpha = 0;
  for (const auto& f : m.fibers()) max_alpha = std::max(max_alpha, f.alpha);
  SearchBudget b;
  b.mu_window = mul(64, max_alpha);
  return b;
}

void SearchBudget::validate() const {
  if (mu_window < 1) throw InvalidInput("mu_window must be >= 1");
  if (lambda_cap && *lambda_cap < 1) throw InvalidInput("lambda_cap must be >= 1");
  if (prefix_stop_run < 1) throw InvalidInput("prefix_stop_run must be >= 1");
}

// ---------------------------------------------------------------------------

StreamStatus enumerate_case1(const SeifertPresentation& m, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink) {
  budget.validate();
  StreamStatus status;
  for (const auto& f : m.fibers())
    if (is_even(f.alpha)) return status;

  const Int w = budget.mu_window;
  for (Int lambda = 1;; lambda += 2) {
    const Int base = lambda - 1;  // 2 + lambda (1 - 3 / lambda)
    const Int cut = cutoff();
    if (base > cut) break;
    const Int cap = budget.lambda_cap ? *budget.lambda_cap : (cut == kNoCutoff ? kFallbackLambdaCap : kNoCutoff);
    if (lambda > cap) {
      status.exhaustive = false;
      break;
    }

    std::array<TorusSweep, 3> t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = sweep_torus(m.fiber(i), lambda, w);

    // Smallest genus at this lambda inside the window.
    auto for_each_triple = [&](auto&& visit) {
      for (Int mu1 = -w; mu1 <= w; ++mu1) {
        const Int n1 = t[0].at(mu1);
        if (n1 < 0) continue;
        for (Int mu2 = std::max(-w, -w - mu1); mu2 <= std::min(w, w - mu1); ++mu2) {
          const Int n2 = t[1].at(mu2);
          if (n2 < 0) continue;
          const Int mu3 = -mu1 - mu2;
          const Int n3 = t[2].at(mu3);
          if (n3 < 0) continue;
          visit(mu1, mu2, mu3, base + n1 + n2 + n3);
        }
      }
    };
    Int local_min = kNoCutoff;
    for_each_triple([&](Int, Int, Int, Int g) { local_min = std::min(local_min, g); });

    const Int emit_limit = std::min(cutoff(), local_min);
    for_each_triple([&](Int mu1, Int mu2, Int mu3, Int g) {
      if (g > emit_limit) return;
      const PHParams p = PHParams::make({SlopePair{lambda, mu1}, SlopePair{lambda, mu2}, SlopePair{lambda, mu3}});
      if (!ph_exists(m, p)) return;
      ++status.emitted;
      sink(p, g);
    });

    // Everything outside the window has some |mu_i| > w.
    std::array<Int, 3> tail{}, floor{};
    bool certified = true;
    for (std::size_t i = 0; i < 3; ++i) {
      auto up = edge_bound(m.fiber(i), lambda, w, +1, budget.prefix_stop_run);
      auto down = edge_bound(m.fiber(i), lambda, w, -1, budget.prefix_stop_run);
      if (!up || !down) certified = false;
      tail[i] = std::min(up.value_or(0), down.value_or(0));
      floor[i] = std::min({t[i].window_min, tail[i]});
    }
    Int outside = kNoCutoff;
    for (std::size_t i = 0; i < 3; ++i) {
      const Int others = floor[(i + 1) % 3] + floor[(i + 2) % 3];
      outside = std::min(outside, base + tail[i] + others);
    }
    if (!certified || outside < cutoff()) status.exhaustive = false;
  }
  return status;
}

StreamStatus enumerate_case3(const SeifertPresentation& m, std::size_t i, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink) {
  budget.validate();
  StreamStatus status;
  const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
  const FiberMatrix& fi = m.fiber(i);
  const FiberMatrix& fj = m.fiber(j);
  const FiberMatrix& fk = m.fiber(k);
  // lambda_j = lambda_k must match both alpha_j and alpha_k mod 2.
  if (!same_parity(fj.alpha, fk.alpha)) return status;
  if (is_even(fi.alpha) && !is_even(fj.alpha)) return status;

  const Int w = budget.mu_window;
  for (Int p = 2;; ++p) {
    const Int lambda = mul(p, fi.alpha);
    const Int base = mul(p, fi.alpha - 1);  // lambda - lambda / alpha_i
    const Int cut = cutoff();
    if (base > cut) break;
    const Int cap = budget.lambda_cap ? *budget.lambda_cap : (cut == kNoCutoff ? kFallbackLambdaCap : kNoCutoff);
    if (lambda > cap) {
      status.exhaustive = false;
      break;
    }
    if (!same_parity(lambda, fj.alpha)) continue;

    const Int c = neg(mul(p, fi.beta));  // mu_j + mu_k
    const Int center = floor_div(c, 2);
    const SlopeFamily j_up = slope_family(fj, lambda, +1), j_down = slope_family(fj, lambda, -1);
    const SlopeFamily k_up = slope_family(fk, lambda, +1), k_down = slope_family(fk, lambda, -1);

    auto visit = [&](Int mu_j) {
      const Int mu_k = sub(c, mu_j);
      if (!same_parity(mu_j, fj.beta) || !same_parity(mu_k, fk.beta)) return;
      if (gcd(lambda, mu_j) != 1 || gcd(lambda, mu_k) != 1) return;
      std::array<SlopePair, 3> pairs;
      pairs[i] = {fi.alpha, fi.beta};
      pairs[j] = {lambda, mu_j};
      pairs[k] = {lambda, mu_k};
      const PHParams params = PHParams::make(pairs);
      if (!ph_exists(m, params)) return;
      const Int g = base + n_genus(torus_curve(fj, pairs[j])) + n_genus(torus_curve(fk, pairs[k]));
      ++status.emitted;
      sink(params, g);
    };

    // Certificate for "every mu_j beyond this point in direction dir".
    auto certified = [&](Int mu_j, int dir) {
      const Int mu_k = sub(c, mu_j);
      const auto bj = tail_lower_bound(dir > 0 ? j_up : j_down, mu_j);
      const auto bk = tail_lower_bound(dir > 0 ? k_down : k_up, mu_k);
      return bj && bk && base + *bj + *bk >= cutoff();
    };

    visit(center);
    std::array<Int, 2> run{0, 0};
    std::array<bool, 2> open{true, true};
    for (Int d = 1; d <= w && (open[0] || open[1]); ++d) {
      for (int side = 0; side < 2; ++side) {
        if (!open[side]) continue;
        const int dir = side == 0 ? +1 : -1;
        const Int mu_j = add(center, dir * d);
        visit(mu_j);
        run[side] = certified(mu_j, dir) ? run[side] + 1 : 0;
        if (run[side] >= budget.prefix_stop_run) open[side] = false;
      }
    }
    if (open[0] || open[1]) status.exhaustive = false;
  }
  return status;
}

StreamStatus enumerate_case3(const SeifertPresentation& m, const SearchBudget& budget,
                             const GenusCutoff& cutoff, const CandidateSink& sink) {
  StreamStatus total;
  for (std::size_t i = 0; i < 3; ++i) {
    const StreamStatus s = enumerate_case3(m, i, budget, cutoff, sink);
    total.exhaustive = total.exhaustive && s.exhaustive;
    total.emitted += s.emitted;
  }
  return total;
}

std::vector<PHParams> enumerate_case4(const SeifertPresentation& m) {
  std::vector<PHParams> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const FiberMatrix& fi = m.fiber(i);
      const FiberMatrix& fj = m.fiber(j);
      if (!(fi.alpha < fj.alpha)) continue;
      const std::size_t k = 3 - i - j;
      const Fraction rest = -(Fraction::of(fi.beta, fi.alpha) + Fraction::of(fj.beta, fj.alpha));
      if (!(fj.alpha < rest.den)) continue;
      std::array<SlopePair, 3> pairs;
      pairs[i] = {fi.alpha, fi.beta};
      pairs[j] = {fj.alpha, fj.beta};
      pairs[k] = {rest.den, rest.num};
      const PHParams p = PHParams::make(pairs);
      if (ph_exists(m, p)) out.push_back(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class ClassTable {
 public:
  explicit ClassTable(const HomologyStructure& h) : classes_(h.nonzero_classes) {}

  Int cutoff() const {
    Int worst = 0;
    for (const auto& c : classes_) {
      auto it = results_.find(c);
      if (it == results_.end()) return kNoCutoff;
      worst = std::max(worst, it->second.min_genus);
    }
    return worst;
  }

  void offer(const SurfaceReport& r) {
    if (std::find(classes_.begin(), classes_.end(), r.z2class) == classes_.end())
      throw InternalError("surface class " + r.z2class.label() + " is not a nonzero class of H_2");
    auto [it, fresh] = results_.try_emplace(r.z2class);
    ClassResult& cr = it->second;
    auto& kind_min = r.is_vertical() ? cr.min_vertical : cr.min_horizontal;
    kind_min = kind_min ? std::min(*kind_min, r.genus) : r.genus;
    if (fresh || r.genus < cr.min_genus) {
      cr.min_genus = r.genus;
      cr.norm = r.norm_contribution;
      cr.witness = r;
      cr.witnesses = {r};
    } else if (r.genus == cr.min_genus && cr.witnesses.size() < kMaxWitnesses) {
      if (std::find(cr.witnesses.begin(), cr.witnesses.end(), r) == cr.witnesses.end()) cr.witnesses.push_back(r);
    }
  }

  const std::vector<Z2Class>& classes() const { return classes_; }
  std::map<Z2Class, ClassResult>& results() { return results_; }

 private:
  std::vector<Z2Class> classes_;
  std::map<Z2Class, ClassResult> results_;
};

void check_not_case2(const PHParams& p) {
  std::array<Int, 3> l{p.pairs[0].lambda, p.pairs[1].lambda, p.pairs[2].lambda};
  std::sort(l.begin(), l.end());
  if (l[0] == l[1] && l[1] < l[2]) throw InternalError("pseudo-horizontal candidate with lambda_i = lambda_j < lambda_k");
}

}  // namespace

NormReport compute_norms(const SeifertPresentation& m, const SearchBudget& budget) {
  budget.validate();
  NormReport report;
  report.presentation = format_presentation(m, Notation::martelli);
  report.canonical_form = canonical_key(m);
  const HomologyStructure h_user = homology_structure(m);
  report.homology = h_user.case_tag;
  if (h_user.case_tag == HomologyCase::trivial) return report;

  // Work with alpha_1 <= alpha_2 <= alpha_3; map back at the end.
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return m.fiber(a).alpha < m.fiber(b).alpha; });
  std::array<std::size_t, 3> inverse{};
  for (std::size_t k = 0; k < 3; ++k) inverse[perm[k]] = k;
  const SeifertPresentation sorted = permute(m, perm);

  ClassTable table(homology_structure(sorted));
  for (const auto& v : vertical_surfaces(sorted)) table.offer(v);

  const GenusCutoff cutoff = [&] { return table.cutoff(); };
  const CandidateSink sink = [&](const PHParams& p, Int genus) {
    check_not_case2(p);
    SurfaceReport r = horizontal_report(sorted, p);
    if (r.genus != genus) throw InternalError("enumerator genus disagrees with ph_genus");
    table.offer(r);
  };

  bool exhaustive = true;
  for (const auto& p : enumerate_case4(sorted)) sink(p, ph_genus(sorted, p));
  // Case (1) runs before Case (3) so the all-odd case has a finite cutoff.
  exhaustive = enumerate_case1(sorted, budget, cutoff, sink).exhaustive && exhaustive;
  exhaustive = enumerate_case3(sorted, budget, cutoff, sink).exhaustive && exhaustive;

  report.exhaustive = exhaustive;
  // Horizontals above the final cutoff may have been pruned, so a larger
  // minimum is not certified.
  const Int final_cutoff = table.cutoff();
  for (const auto& c : table.classes()) {
    auto it = table.results().find(c);
    if (it == table.results().end())
      throw InternalError("no representative found for class " + c.label() + " within the search budget");
    ClassResult cr = it->second;
    cr.exhaustive = exhaustive;
    if (cr.min_horizontal && *cr.min_horizontal > final_cutoff) cr.min_horizontal.reset();
    cr.witness = permute(cr.witness, inverse);
    for (auto& w : cr.witnesses) w = permute(w, inverse);
    report.per_class.emplace(permute(c, inverse), std::move(cr));
  }
  return report;
}

NormReport compute_norms(const SeifertPresentation& m) { return compute_norms(m, SearchBudget::defaults_for(m)); }

}  // namespace sfs
