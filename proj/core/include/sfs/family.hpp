#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfs/norm_search.hpp"

namespace sfs {

// Integer expressions over named variables: + - * / % with parentheses,
// unary minus, and implicit multiplication ("2m+1" is 2*m+1). Comparisons
// (< <= > >= == !=) and && are allowed in conditions.
using Bindings = std::map<std::string, Int, std::less<>>;

Int eval_expression(std::string_view expr, const Bindings& vars);
bool eval_condition(std::string_view cond, const Bindings& vars);

// One family line:
//   template | var=lo..hi | var=a,b,c | if condition
// The template is a presentation in any notation with {expr} holes.
// Range bounds may refer to variables declared earlier on the line.
struct FamilySpec {
  struct Variable {
    std::string name;
    std::vector<std::string> values;  // explicit list, or
    std::string lo, hi;               // inclusive range when values is empty
  };
  std::string template_text;
  std::vector<Variable> vars;
  std::vector<std::string> conditions;
  std::size_t line = 0;
};

// '#' starts a comment; blank lines are ignored. ParseError carries the line.
std::vector<FamilySpec> parse_family_file(std::string_view text);
FamilySpec parse_family_line(std::string_view line, std::size_t line_number = 1);

// Template with holes filled from `vars`.
std::string instantiate(const FamilySpec& spec, const Bindings& vars);

struct BudgetOverrides {
  std::optional<Int> mu_window;
  std::optional<Int> lambda_cap;
};

SearchBudget resolve_budget(const SeifertPresentation& m, const BudgetOverrides& o);

struct ScanRow {
  std::string canonical_form;
  Bindings bindings;
  Z2Class cls;
  ClassResult result;

  // min_vertical - min_horizontal when both kinds were found.
  std::optional<Int> gap() const;
};

// One row per (instance, nonzero class), in grid order. Instances that
// violate a condition or do not give a valid small presentation are
// skipped with a line on `log` (when non-null).
std::vector<ScanRow> family_scan(const FamilySpec& spec, const BudgetOverrides& budget, std::ostream* log);

}  // namespace sfs
