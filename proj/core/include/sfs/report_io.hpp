#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sfs/family.hpp"
#include "sfs/norm_search.hpp"

namespace sfs {

// JSON shapes (all round-trip through from_json):
//   Z2Class       {"case": "...", "parities": [e1, e2, e3], "label": "V13"}
//   SurfaceReport {"kind": "vertical"|"horizontal", "params": ..., "genus",
//                  "class", "norm"}; params is [i, j] (1-based) for a
//                  vertical surface and [[lambda, mu] x3] for a horizontal one
//   NormReport    {"presentation", "canonical_form", "homology",
//                  "exhaustive", "classes": [...]}
void to_json(nlohmann::json& j, const Z2Class& c);
void from_json(const nlohmann::json& j, Z2Class& c);
void to_json(nlohmann::json& j, const SurfaceReport& r);
void from_json(const nlohmann::json& j, SurfaceReport& r);
void to_json(nlohmann::json& j, const ClassResult& r);
void from_json(const nlohmann::json& j, ClassResult& r);
void to_json(nlohmann::json& j, const NormReport& r);
void from_json(const nlohmann::json& j, NormReport& r);

inline constexpr std::string_view kCsvHeader =
    "canonical_form,class,e1,e2,e3,min_genus,norm,witness_kind,gap,exhaustive";

std::string csv_escape(std::string_view field);
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const std::string& canonical_form, const Z2Class& cls, const ClassResult& r);
void write_csv(std::ostream& os, const NormReport& r);  // header + rows
void write_csv(std::ostream& os, const std::vector<ScanRow>& rows);

void write_text(std::ostream& os, const NormReport& r);

}  // namespace sfs
