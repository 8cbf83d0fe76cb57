#include "sfs/family.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "sfs/errors.hpp"

namespace sfs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const Bindings& vars) : s_(text), vars_(vars) {}

  Int parse_expression_only() {
    Int v = expr();
    end();
    return v;
  }

  bool parse_condition_only() {
    bool v = conjunction();
    end();
    return v;
  }

 private:
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(std::string_view tok) {
    ws();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " in expression '" + std::string(s_) + "' at position " + std::to_string(pos_ + 1), pos_);
  }
  void end() {
    ws();
    if (pos_ != s_.size()) fail("unexpected input");
  }

  bool conjunction() {
    bool v = comparison();
    while (accept("&&")) v = comparison() && v;
    return v;
  }

  bool comparison() {
    Int lhs = expr();
    static constexpr std::string_view ops[] = {"<=", ">=", "==", "!=", "<", ">"};
    for (auto op : ops) {
      if (accept(op)) {
        Int rhs = expr();
        if (op == "<=") return lhs <= rhs;
        if (op == ">=") return lhs >= rhs;
        if (op == "==") return lhs == rhs;
        if (op == "!=") return lhs != rhs;
        if (op == "<") return lhs < rhs;
        return lhs > rhs;
      }
    }
    fail("expected a comparison");
  }

  Int expr() {
    Int v = term();
    for (;;) {
      if (accept("+")) v = add(v, term());
      else if (accept("-")) v = sub(v, term());
      else return v;
    }
  }

  Int term() {
    Int v = unary();
    for (;;) {
      ws();
      if (accept("*")) {
        v = mul(v, unary());
      } else if (accept("/")) {
        Int d = unary();
        if (d == 0) fail("division by zero");
        v = floor_div(v, d);
      } else if (accept("%")) {
        Int d = unary();
        if (d == 0) fail("division by zero");
        v = floor_mod(v, d);
      } else if (pos_ < s_.size() && (is_ident_start(s_[pos_]) || s_[pos_] == '(')) {
        v = mul(v, primary());  // implicit multiplication
      } else {
        return v;
      }
    }
  }

  Int unary() {
    if (accept("-")) return neg(unary());
    if (accept("+")) return unary();
    return primary();
  }

  Int primary() {
    ws();
    if (accept("(")) {
      Int v = expr();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = add(mul(v, 10), s_[pos_++] - '0');
      return v;
    }
    if (pos_ < s_.size() && is_ident_start(s_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto it = vars_.find(name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return it->second;
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string describe(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

Int eval_expression(std::string_view expr, const Bindings& vars) {
  return ExprParser(expr, vars).parse_expression_only();
}

bool eval_condition(std::string_view cond, const Bindings& vars) {
  return ExprParser(cond, vars).parse_condition_only();
}

FamilySpec parse_family_line(std::string_view line, std::size_t line_number) {
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_number) + ": " + what, 0, line_number);
  };
  FamilySpec spec;
  spec.line = line_number;
  auto parts = split(line, '|');
  spec.template_text = std::string(trim(parts[0]));
  if (spec.template_text.empty()) throw fail("empty template");
  for (std::size_t n = 1; n < parts.size(); ++n) {
    std::string_view clause = trim(parts[n]);
    if (clause.substr(0, 3) == "if " || clause.substr(0, 6) == "where ") {
      clause.remove_prefix(clause.find(' ') + 1);
      spec.conditions.emplace_back(trim(clause));
      continue;
    }
    auto eq = clause.find('=');
    if (eq == std::string_view::npos) throw fail("expected 'var=range' or 'if condition', got '" + std::string(clause) + "'");
    FamilySpec::Variable v;
    v.name = std::string(trim(clause.substr(0, eq)));
    if (v.name.empty() || !is_ident_start(v.name[0])) throw fail("bad variable name '" + v.name + "'");
    for (char c : v.name)
      if (!is_ident_char(c)) throw fail("bad variable name '" + v.name + "'");
    std::string_view rhs = trim(clause.substr(eq + 1));
    if (auto dots = rhs.find(".."); dots != std::string_view::npos) {
      v.lo = std::string(trim(rhs.substr(0, dots)));
      v.hi = std::string(trim(rhs.substr(dots + 2)));
      if (v.lo.empty() || v.hi.empty()) throw fail("range for '" + v.name + "' needs both bounds");
    } else {
      for (auto item : split(rhs, ',')) {
        if (trim(item).empty()) throw fail("empty value in list for '" + v.name + "'");
        v.values.emplace_back(trim(item));
      }
    }
    spec.vars.push_back(std::move(v));
  }
  // Check that every expression only uses variables declared before it.
  Bindings probe;
  try {
    for (const auto& v : spec.vars) {
      if (v.values.empty()) {
        eval_expression(v.lo, probe);
        eval_expression(v.hi, probe);
      } else {
        for (const auto& e : v.values) eval_expression(e, probe);
      }
      probe[v.name] = 1;
    }
    for (const auto& c : spec.conditions) eval_condition(c, probe);
    instantiate(spec, probe);
  } catch (const ParseError& e) {
    throw fail(e.what());
  } catch (const InternalError&) {
    // Arithmetic trouble at the probe values is not a syntax problem.
  }
  return spec;
}

std::vector<FamilySpec> parse_family_file(std::string_view text) {
  std::vector<FamilySpec> out;
  std::size_t n = 0;
  for (auto raw : split(text, '\n')) {
    ++n;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_family_line(line, n));
  }
  return out;
}

std::string instantiate(const FamilySpec& spec, const Bindings& vars) {
  std::string out;
  const std::string& t = spec.template_text;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '{') {
      auto close = t.find('}', i);
      if (close == std::string::npos) throw ParseError("unclosed '{' in template", i, spec.line);
      out += std::to_string(eval_expression(std::string_view(t).substr(i + 1, close - i - 1), vars));
      i = close;
    } else if (t[i] == '}') {
      throw ParseError("stray '}' in template", i, spec.line);
    } else {
      out += t[i];
    }
  }
  return out;
}

SearchBudget resolve_budget(const SeifertPresentation& m, const BudgetOverrides& o) {
  SearchBudget b = SearchBudget::defaults_for(m);
  if (o.mu_window) b.mu_window = *o.mu_window;
  if (o.lambda_cap) b.lambda_cap = *o.lambda_cap;
  return b;
}

std::optional<Int> ScanRow::gap() const {
  if (result.min_vertical && result.min_horizontal) return *result.min_vertical - *result.min_horizontal;
  return std::nullopt;
}

std::vector<ScanRow> family_scan(const FamilySpec& spec, const BudgetOverrides& budget, std::ostream* log) {
  std::vector<ScanRow> rows;
  Bindings current;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == spec.vars.size()) {
      for (const auto& c : spec.conditions) {
        if (!eval_condition(c, current)) {
          if (log) *log << "line " << spec.line << ": skipped " << describe(current) << ": condition '" << c << "' fails\n";
          return;
        }
      }
      const std::string text = instantiate(spec, current);
      std::optional<SeifertPresentation> m;
      try {
        m = parse_presentation(text);
      } catch (const Error& e) {
        if (log) *log << "line " << spec.line << ": skipped " << describe(current) << " (" << text << "): " << e.what() << '\n';
        return;
      }
      const NormReport r = compute_norms(*m, resolve_budget(*m, budget));
      for (const auto& [cls, res] : r.per_class) rows.push_back(ScanRow{r.canonical_form, current, cls, res});
      return;
    }
    const auto& v = spec.vars[depth];
    std::vector<Int> values;
    if (v.values.empty()) {
      const Int lo = eval_expression(v.lo, current), hi = eval_expression(v.hi, current);
      for (Int x = lo; x <= hi; ++x) values.push_back(x);
    } else {
      for (const auto& e : v.values) values.push_back(eval_expression(e, current));
    }
    for (Int x : values) {
      current[v.name] = x;
      recurse(depth + 1);
    }
    current.erase(v.name);
  };
  recurse(0);
  return rows;
}

}  // namespace sfs
