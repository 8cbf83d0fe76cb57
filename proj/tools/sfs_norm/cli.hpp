#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sfs/checked.hpp"
#include "sfs/seifert.hpp"

namespace sfs::cli {

enum class OutputFormat { text, json, csv };

struct CliConfig {
  OutputFormat output_format = OutputFormat::text;
  std::optional<Int> mu_window;
  std::optional<Int> lambda_cap;
  bool explain = false;
  std::optional<Notation> notation;
};

enum ExitCode : int { ok = 0, usage_error = 1, invalid_presentation = 2, internal_error = 3 };

int cmd_n_genus(Int twok, Int q, const CliConfig& cfg, std::ostream& out);
int cmd_norm(const std::string& presentation, const CliConfig& cfg, std::ostream& out);
int cmd_convert(const std::string& presentation, const std::string& target, const CliConfig& cfg,
                std::ostream& out);
int cmd_scan(const std::string& spec_text, const CliConfig& cfg, std::ostream& out, std::ostream& log);

// argv[0] is the program name. env_mu_window is the value of SFS_NORM_MU_WINDOW, if set.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_mu_window = std::nullopt);

}  // namespace sfs::cli
