#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfs/errors.hpp"
#include "sfs/family.hpp"
#include "sfs/lens_norm.hpp"
#include "sfs/norm_search.hpp"
#include "sfs/report_io.hpp"

namespace sfs::cli {
namespace {

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

BudgetOverrides overrides(const CliConfig& cfg) { return {cfg.mu_window, cfg.lambda_cap}; }

Int parse_positive(const std::string& text, const char* what) {
  Int v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end || v <= 0)
    throw ParseError(std::string(what) + " must be a positive integer, got '" + text + "'", 0);
  return v;
}

}  // namespace

int cmd_n_genus(Int twok, Int q, const CliConfig& cfg, std::ostream& out) {
  LensCurve c{twok, q};
  validate(c);
  const Int n = n_genus(c);
  if (cfg.output_format == OutputFormat::json) {
    nlohmann::json j{{"twok", twok}, {"q", q}, {"n", n}};
    if (cfg.explain) {
      LensCurve r = normalize_lens(c);
      j["normalized"] = {r.twok, r.q};
      if (r.twok != 0) {
        auto d = cf_expand(r.twok, r.q);
        j["digits"] = d.digits();
        j["b"] = skip_sequence(d.digits());
      }
    }
    out << j.dump() << '\n';
    return ok;
  }
  if (!cfg.explain) {
    out << n << '\n';
    return ok;
  }
  out << "N(" << twok << ", " << q << ")\n";
  LensCurve s = c;
  if (s.twok < 0) {
    s = {neg(s.twok), neg(s.q)};
    out << "  sign flip      -> (" << s.twok << ", " << s.q << ")\n";
  }
  if (s.twok == 0) {
    out << "  N(0, +-1) = 0\n" << n << '\n';
    return ok;
  }
  if (Int m = floor_mod(s.q, s.twok); m != s.q) {
    s.q = m;
    out << "  q mod 2k       -> (" << s.twok << ", " << s.q << ")\n";
  }
  if (2 * s.q > s.twok) {
    s.q = s.twok - s.q;
    out << "  q -> 2k - q    -> (" << s.twok << ", " << s.q << ")\n";
  }
  auto d = cf_expand(s.twok, s.q);
  auto b = skip_sequence(d.digits());
  out << "  digits a       = " << join(d.digits()) << '\n';
  out << "  b-sequence     = " << join(b) << '\n';
  out << "  N = sum(b) / 2 = " << n << '\n';
  out << n << '\n';
  return ok;
}

int cmd_norm(const std::string& presentation, const CliConfig& cfg, std::ostream& out) {
  auto m = parse_presentation(presentation, cfg.notation);
  auto report = compute_norms(m, resolve_budget(m, overrides(cfg)));
  switch (cfg.output_format) {
    case OutputFormat::json: out << nlohmann::json(report).dump(2) << '\n'; break;
    case OutputFormat::csv: write_csv(out, report); break;
    case OutputFormat::text: write_text(out, report); break;
  }
  return ok;
}

int cmd_convert(const std::string& presentation, const std::string& target, const CliConfig& cfg,
                std::ostream& out) {
  auto n = notation_from_name(target);
  if (!n) throw ParseError("unknown notation '" + target + "' (expected martelli, hatcher or orlik)", 0);
  auto m = parse_presentation(presentation, cfg.notation);
  if (cfg.output_format == OutputFormat::json)
    out << nlohmann::json{{"input", presentation}, {"notation", target}, {"output", format_presentation(m, *n)}}
               .dump()
        << '\n';
  else
    out << format_presentation(m, *n) << '\n';
  return ok;
}

int cmd_scan(const std::string& spec_text, const CliConfig& cfg, std::ostream& out, std::ostream& log) {
  auto specs = parse_family_file(spec_text);
  std::vector<ScanRow> rows;
  for (const auto& spec : specs) {
    auto part = family_scan(spec, overrides(cfg), &log);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (cfg.output_format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"canonical_form", r.canonical_form}, {"bindings", r.bindings}, {"class", r.cls},
                       {"result", r.result}};
      j["gap"] = r.gap() ? nlohmann::json(*r.gap()) : nlohmann::json(nullptr);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    write_csv(out, rows);
  }
  return ok;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_mu_window) {
  CLI::App app{"Z2-Thurston norm of small Seifert fibered 3-manifolds", "sfs-norm"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "text", notation, out_path;
  std::optional<Int> mu_window, lambda_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--mu-window", mu_window, "Half-width of the mu sweep")->check(CLI::PositiveNumber);
  app.add_option("--lambda-cap", lambda_cap, "Upper bound on lambda")->check(CLI::PositiveNumber);
  app.add_flag("--explain", cfg.explain, "Show intermediate steps");
  app.add_option("--notation", notation, "Force the input notation")
      ->check(CLI::IsMember({"martelli", "hatcher", "orlik"}));
  app.add_option("--out", out_path, "Write output to FILE");

  Int twok = 0, q = 0;
  auto* ng = app.add_subcommand("n-genus", "Print N(2k, q)")->fallthrough();
  ng->add_option("2K", twok)->required();
  ng->add_option("Q", q)->required();

  std::string pres;
  auto* norm = app.add_subcommand("norm", "Norms of all nonzero Z2 classes")->fallthrough();
  norm->add_option("presentation", pres)->required();

  std::string target;
  auto* conv = app.add_subcommand("convert", "Rewrite a presentation in another notation")->fallthrough();
  conv->add_option("presentation", pres)->required();
  conv->add_option("notation", target)->required();

  std::string spec_path;
  auto* scan = app.add_subcommand("scan", "Scan a family spec file, emit CSV")->fallthrough();
  scan->add_option("file", spec_path)->required();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? ok : usage_error;
  }

  try {
    cfg.output_format = format == "json" ? OutputFormat::json
                        : format == "csv" ? OutputFormat::csv
                                          : OutputFormat::text;
    if (!notation.empty()) cfg.notation = notation_from_name(notation);
    cfg.lambda_cap = lambda_cap;
    cfg.mu_window = mu_window;
    if (!cfg.mu_window && env_mu_window && !env_mu_window->empty())
      cfg.mu_window = parse_positive(*env_mu_window, "SFS_NORM_MU_WINDOW");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return usage_error;
      }
      sink = &file;
    }

    if (*ng) return cmd_n_genus(twok, q, cfg, *sink);
    if (*norm) return cmd_norm(pres, cfg, *sink);
    if (*conv) return cmd_convert(pres, target, cfg, *sink);
    std::ifstream in(spec_path);
    if (!in) {
      err << "error: cannot read '" << spec_path << "'\n";
      return usage_error;
    }
    std::stringstream text;
    text << in.rdbuf();
    return cmd_scan(text.str(), cfg, *sink, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return invalid_presentation;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace sfs::cli
