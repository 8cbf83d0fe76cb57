#include "sfs/seifert.hpp"

#include <cctype>
#include <sstream>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
Int mod_inverse(Int a, Int m) {
  Int old_r = floor_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = sub(old_r, mul(q, r));
    old_r = r;
    r = t;
    t = sub(old_s, mul(q, s));
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidInput("mod_inverse: not invertible");
  return floor_mod(old_s, m);
}

void check_pair(Int alpha, Int beta, std::size_t index) {
  const std::string where = " (fiber " + std::to_string(index + 1) + ")";
  if (alpha < 2)
    throw InvalidInput("exceptional fiber needs alpha >= 2, got " + std::to_string(alpha) + where);
  if (gcd(alpha, beta) != 1)
    throw InvalidInput("alpha and beta must be coprime, got (" + std::to_string(alpha) + "," +
                       std::to_string(beta) + ")" + where);
}

}  // namespace

FiberMatrix complete_matrix(Int alpha, Int beta) {
  check_pair(alpha, beta, 0);
  const Int abs_beta = beta < 0 ? neg(beta) : beta;
  Int delta = abs_beta == 1 ? 1 : mod_inverse(alpha, abs_beta);
  if (delta == 0) delta = abs_beta;
  Int num = sub(mul(alpha, delta), 1);
  if (num % beta != 0) throw InternalError("complete_matrix: inverse computation failed");
  FiberMatrix f{alpha, beta, num / beta, delta};
  if (f.det() != 1) throw InternalError("complete_matrix: determinant is not 1");
  return f;
}

SeifertPresentation::SeifertPresentation(const std::array<FiberMatrix, 3>& fibers) : fibers_(fibers) {
  for (std::size_t i = 0; i < 3; ++i) {
    check_pair(fibers_[i].alpha, fibers_[i].beta, i);
    if (fibers_[i].det() != 1)
      throw InvalidInput("gluing matrix of fiber " + std::to_string(i + 1) + " must have determinant 1");
  }
  if (euler_sum().is_zero())
    throw InvalidInput("not small: sum of beta/alpha is 0, a horizontal incompressible surface exists");
}

SeifertPresentation SeifertPresentation::from_pairs(const std::array<FiberPair, 3>& pairs) {
  std::array<FiberMatrix, 3> f;
  for (std::size_t i = 0; i < 3; ++i) {
    check_pair(pairs[i].first, pairs[i].second, i);
    f[i] = complete_matrix(pairs[i].first, pairs[i].second);
  }
  return SeifertPresentation(f);
}

std::array<FiberPair, 3> SeifertPresentation::pairs() const {
  return {FiberPair{fibers_[0].alpha, fibers_[0].beta}, FiberPair{fibers_[1].alpha, fibers_[1].beta},
          FiberPair{fibers_[2].alpha, fibers_[2].beta}};
}

Fraction SeifertPresentation::euler_sum() const {
  Fraction s;
  for (const auto& f : fibers_) s = s + Fraction::of(f.beta, f.alpha);
  return s;
}

std::optional<Notation> notation_from_name(std::string_view name) {
  if (name == "martelli") return Notation::martelli;
  if (name == "hatcher") return Notation::hatcher;
  if (name == "orlik") return Notation::orlik;
  return std::nullopt;
}

std::string_view notation_name(Notation n) {
  switch (n) {
    case Notation::martelli: return "martelli";
    case Notation::hatcher: return "hatcher";
    case Notation::orlik: return "orlik";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected an integer");
    }
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      try {
        v = add(mul(v, 10), text_[pos_] - '0');
      } catch (const InternalError&) {
        throw ParseError("integer out of range", start);
      }
      ++pos_;
    }
    return negative ? -v : v;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_ + 1), pos_);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::array<FiberPair, 3> parse_martelli(Scanner& s) {
  if (!s.accept("S2") && !s.accept("S^2")) s.fail("expected 'S2'");
  s.expect('(');
  std::array<FiberPair, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) s.expect(',');
    s.expect('(');
    out[i].first = s.integer();
    s.expect(',');
    out[i].second = s.integer();
    s.expect(')');
  }
  s.expect(')');
  s.finish();
  return out;
}

std::array<FiberPair, 3> parse_hatcher(Scanner& s) {
  if (!s.accept('M')) s.fail("expected 'M'");
  s.expect('(');
  s.accept('+');
  if (s.integer() != 0) s.fail("only genus +0 base orbifolds are supported");
  s.expect(',');
  if (s.integer() != 0) s.fail("expected 0 for the Euler term");
  s.expect(';');
  std::array<FiberPair, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) s.expect(',');
    out[i].second = s.integer();
    s.expect('/');
    out[i].first = s.integer();
  }
  s.expect(')');
  s.finish();
  return out;
}

OrlikForm parse_orlik(Scanner& s) {
  s.expect('[');
  OrlikForm f;
  f.e = s.integer();
  if (s.accept(',')) {
    // Long form [e,(o1,0); ...].
    s.expect('(');
    if (!s.accept("o1")) s.fail("expected 'o1'");
    s.expect(',');
    if (s.integer() != 0) s.fail("expected genus 0");
    s.expect(')');
  }
  s.expect(';');
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) s.expect(',');
    s.expect('(');
    f.triples[i].first = s.integer();
    s.expect(',');
    f.triples[i].second = s.integer();
    s.expect(')');
  }
  s.expect(']');
  s.finish();
  return f;
}

Notation detect(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size()) {
    if (text[i] == '[') return Notation::orlik;
    if (text[i] == 'M') return Notation::hatcher;
    if (text[i] == 'S') return Notation::martelli;
  }
  throw ParseError("unrecognised notation: expected 'S2(', 'M(' or '[' at position " + std::to_string(i + 1), i);
}

}  // namespace

SeifertPresentation parse_presentation(std::string_view text, std::optional<Notation> forced) {
  const Notation n = forced ? *forced : detect(text);
  Scanner s(text);
  switch (n) {
    case Notation::martelli: return SeifertPresentation::from_pairs(parse_martelli(s));
    case Notation::hatcher: return SeifertPresentation::from_pairs(parse_hatcher(s));
    case Notation::orlik: return from_orlik(parse_orlik(s));
  }
  throw InternalError("unreachable notation");
}

std::string format_presentation(const SeifertPresentation& m, Notation n) {
  std::ostringstream os;
  const auto p = m.pairs();
  switch (n) {
    case Notation::martelli:
      os << "S2(";
      for (std::size_t i = 0; i < 3; ++i) os << (i ? "," : "") << '(' << p[i].first << ',' << p[i].second << ')';
      os << ')';
      break;
    case Notation::hatcher:
      os << "M(+0,0;";
      for (std::size_t i = 0; i < 3; ++i) os << (i ? ", " : " ") << p[i].second << '/' << p[i].first;
      os << ')';
      break;
    case Notation::orlik: {
      const OrlikForm f = to_orlik_normal_form(m);
      os << '[' << f.e << ';';
      for (std::size_t i = 0; i < 3; ++i)
        os << (i ? "," : " ") << '(' << f.triples[i].first << ',' << f.triples[i].second << ')';
      os << ']';
      break;
    }
  }
  return os.str();
}

OrlikForm to_orlik_normal_form(const SeifertPresentation& m) {
  OrlikForm f;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& fib = m.fiber(i);
    Int reduced = floor_mod(fib.beta, fib.alpha);
    f.triples[i] = {fib.alpha, reduced};
    f.e = add(f.e, (fib.beta - reduced) / fib.alpha);
  }
  return f;
}

SeifertPresentation from_orlik(const OrlikForm& f) {
  std::array<FiberPair, 3> pairs = f.triples;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [alpha, beta] = pairs[i];
    if (alpha < 2) check_pair(alpha, beta, i);
    if (!(0 < beta && beta < alpha))
      throw InvalidInput("Orlik form requires 0 < beta' < alpha (fiber " + std::to_string(i + 1) + ")");
  }
  pairs[0].second = add(pairs[0].second, mul(f.e, pairs[0].first));
  return SeifertPresentation::from_pairs(pairs);
}

std::string canonical_key(const SeifertPresentation& m) { return format_presentation(m, Notation::orlik); }

SeifertPresentation normalize_even_betas(const SeifertPresentation& m) {
  auto p = m.pairs();
  Int beta_sum = 0;
  for (const auto& [a, b] : p) {
    if (is_even(a)) throw InvalidInput("normalize_even_betas: every alpha must be odd");
    beta_sum = add(beta_sum, b);
  }
  if (!is_even(beta_sum)) throw InvalidInput("normalize_even_betas: beta sum is odd, H1(M;Z2) = 0");
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < 3; ++i)
    if (!is_even(p[i].second)) odd.push_back(i);
  if (odd.empty()) return m;
  // Exactly two odd betas; one compensating move flips both.
  p[odd[0]].second = add(p[odd[0]].second, p[odd[0]].first);
  p[odd[1]].second = sub(p[odd[1]].second, p[odd[1]].first);
  return SeifertPresentation::from_pairs(p);
}

std::string_view homology_case_name(HomologyCase c) {
  switch (c) {
    case HomologyCase::trivial: return "trivial";
    case HomologyCase::cyclic_vertical: return "cyclic_vertical";
    case HomologyCase::cyclic_two_even: return "cyclic_two_even";
    case HomologyCase::klein_four: return "klein_four";
  }
  return "?";
}

std::optional<HomologyCase> homology_case_from_name(std::string_view name) {
  for (auto c : {HomologyCase::trivial, HomologyCase::cyclic_vertical, HomologyCase::cyclic_two_even,
                 HomologyCase::klein_four})
    if (homology_case_name(c) == name) return c;
  return std::nullopt;
}

std::string Z2Class::label() const {
  if (tag == HomologyCase::cyclic_vertical) return "H";
  std::string s = "V";
  for (std::size_t i = 0; i < 3; ++i)
    if (parities[i]) s += static_cast<char>('1' + i);
  return s;
}

HomologyStructure homology_structure(const SeifertPresentation& m) {
  HomologyStructure h;
  std::vector<std::size_t> even;
  Int beta_sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (is_even(m.fiber(i).alpha)) even.push_back(i);
    beta_sum = add(beta_sum, m.fiber(i).beta);
  }
  switch (even.size()) {
    case 0:
      if (is_even(beta_sum)) {
        h.case_tag = HomologyCase::cyclic_vertical;
        h.nonzero_classes.push_back({HomologyCase::cyclic_vertical, {1, 1, 1}});
      }
      break;
    case 1: break;
    case 2: {
      h.case_tag = HomologyCase::cyclic_two_even;
      Z2Class c{HomologyCase::cyclic_two_even, {0, 0, 0}};
      c.parities[even[0]] = c.parities[even[1]] = 1;
      h.nonzero_classes.push_back(c);
      break;
    }
    default:
      h.case_tag = HomologyCase::klein_four;
      h.nonzero_classes = {{HomologyCase::klein_four, {1, 1, 0}},
                           {HomologyCase::klein_four, {0, 1, 1}},
                           {HomologyCase::klein_four, {1, 0, 1}}};
      break;
  }
  return h;
}

SeifertPresentation permute(const SeifertPresentation& m, const std::array<std::size_t, 3>& perm) {
  return SeifertPresentation({m.fiber(perm[0]), m.fiber(perm[1]), m.fiber(perm[2])});
}

Z2Class permute(const Z2Class& c, const std::array<std::size_t, 3>& perm) {
  return {c.tag, {c.parities[perm[0]], c.parities[perm[1]], c.parities[perm[2]]}};
}

}  // namespace sfs
