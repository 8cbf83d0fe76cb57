#include "sfs/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "sfs/errors.hpp"

namespace sfs {

using nlohmann::json;

void to_json(json& j, const Z2Class& c) {
  j = json{{"case", homology_case_name(c.tag)},
           {"parities", {c.parities[0], c.parities[1], c.parities[2]}},
           {"label", c.label()}};
}

void from_json(const json& j, Z2Class& c) {
  auto tag = homology_case_from_name(j.at("case").get<std::string>());
  if (!tag) throw InvalidInput("unknown homology case in JSON");
  c.tag = *tag;
  const auto& p = j.at("parities");
  for (std::size_t i = 0; i < 3; ++i) c.parities[i] = p.at(i).get<std::uint8_t>();
}

void to_json(json& j, const SurfaceReport& r) {
  j = json{{"kind", r.kind_name()}, {"genus", r.genus}, {"class", r.z2class}, {"norm", r.norm_contribution}};
  if (const auto* v = std::get_if<VerticalSurface>(&r.kind)) {
    j["params"] = {v->i + 1, v->j + 1};
  } else {
    const auto& p = std::get<PHParams>(r.kind);
    json params = json::array();
    for (const auto& s : p.pairs) params.push_back({s.lambda, s.mu});
    j["params"] = params;
  }
}

void from_json(const json& j, SurfaceReport& r) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& params = j.at("params");
  if (kind == "vertical") {
    r.kind = VerticalSurface{params.at(0).get<std::size_t>() - 1, params.at(1).get<std::size_t>() - 1};
  } else if (kind == "horizontal") {
    std::array<SlopePair, 3> pairs;
    for (std::size_t i = 0; i < 3; ++i) pairs[i] = {params.at(i).at(0).get<Int>(), params.at(i).at(1).get<Int>()};
    r.kind = PHParams::make(pairs);
  } else {
    throw InvalidInput("unknown surface kind '" + kind + "' in JSON");
  }
  r.genus = j.at("genus").get<Int>();
  r.z2class = j.at("class").get<Z2Class>();
  r.norm_contribution = j.at("norm").get<Int>();
}

void to_json(json& j, const ClassResult& r) {
  j = json{{"min_genus", r.min_genus}, {"norm", r.norm},           {"witness", r.witness},
           {"exhaustive", r.exhaustive}, {"witnesses", r.witnesses}};
  j["min_vertical"] = r.min_vertical ? json(*r.min_vertical) : json(nullptr);
  j["min_horizontal"] = r.min_horizontal ? json(*r.min_horizontal) : json(nullptr);
}

void from_json(const json& j, ClassResult& r) {
  r.min_genus = j.at("min_genus").get<Int>();
  r.norm = j.at("norm").get<Int>();
  r.witness = j.at("witness").get<SurfaceReport>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.witnesses = j.at("witnesses").get<std::vector<SurfaceReport>>();
  auto opt = [&](const char* key) -> std::optional<Int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<Int>();
  };
  r.min_vertical = opt("min_vertical");
  r.min_horizontal = opt("min_horizontal");
}

void to_json(json& j, const NormReport& r) {
  json classes = json::array();
  for (const auto& [cls, res] : r.per_class) {
    json entry = res;
    entry["class"] = cls;
    classes.push_back(std::move(entry));
  }
  j = json{{"presentation", r.presentation},
           {"canonical_form", r.canonical_form},
           {"homology", homology_case_name(r.homology)},
           {"exhaustive", r.exhaustive},
           {"classes", classes}};
}

void from_json(const json& j, NormReport& r) {
  r.presentation = j.at("presentation").get<std::string>();
  r.canonical_form = j.at("canonical_form").get<std::string>();
  auto tag = homology_case_from_name(j.at("homology").get<std::string>());
  if (!tag) throw InvalidInput("unknown homology case in JSON");
  r.homology = *tag;
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.per_class.clear();
  for (const auto& entry : j.at("classes")) r.per_class.emplace(entry.at("class").get<Z2Class>(), entry.get<ClassResult>());
}

// ---------------------------------------------------------------------------

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const std::string& canonical_form, const Z2Class& cls, const ClassResult& r) {
  os << csv_escape(canonical_form) << ',' << cls.label() << ',' << int(cls.parities[0]) << ','
     << int(cls.parities[1]) << ',' << int(cls.parities[2]) << ',' << r.min_genus << ',' << r.norm << ','
     << r.witness.kind_name() << ',';
  if (r.min_vertical && r.min_horizontal) os << (*r.min_vertical - *r.min_horizontal);
  os << ',' << (r.exhaustive ? "true" : "false") << '\n';
}

void write_csv(std::ostream& os, const NormReport& r) {
  write_csv_header(os);
  for (const auto& [cls, res] : r.per_class) write_csv_row(os, r.canonical_form, cls, res);
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  write_csv_header(os);
  for (const auto& row : rows) write_csv_row(os, row.canonical_form, row.cls, row.result);
}

void write_text(std::ostream& os, const NormReport& r) {
  os << r.presentation << "  " << r.canonical_form << '\n';
  os << "H_2(M;Z2): " << homology_case_name(r.homology) << ", " << r.per_class.size() << " nonzero class"
     << (r.per_class.size() == 1 ? "" : "es") << '\n';
  if (r.per_class.empty()) return;
  os << std::left << std::setw(7) << "class" << std::setw(10) << "e1 e2 e3" << std::setw(11) << "min_genus"
     << std::setw(6) << "norm" << std::setw(40) << "witness" << "exhaustive\n";
  for (const auto& [cls, res] : r.per_class) {
    std::ostringstream parities;
    parities << int(cls.parities[0]) << "  " << int(cls.parities[1]) << "  " << int(cls.parities[2]);
    os << std::setw(7) << cls.label() << std::setw(10) << parities.str() << std::setw(11) << res.min_genus
       << std::setw(6) << res.norm << std::setw(40) << res.witness.describe() << (res.exhaustive ? "yes" : "no")
       << '\n';
    for (const auto& w : res.witnesses)
      if (!(w == res.witness)) os << std::setw(34) << "" << "also " << w.describe() << '\n';
  }
}

}  // namespace sfs
