#include "charprime/errata.hpp"

#include <json.hpp>

namespace charprime {
namespace {

// Allowlist of known misprints. Table rows are matched by (table, label,
// printed); the recomputed value pins what the correction must be.
constexpr std::string_view kManifest = R"json([
  {"table": "s13", "label": "I", "printed": "0.699245", "recomputed": "0.669244",
   "note": "digit slip (6 printed as 9); K follows from the corrected value"},
  {"table": "s21", "label": "beta(11)", "printed": "0.9999947", "recomputed": "0.9999944",
   "note": "decimal expansion of the closed form is 3 units high in the 7th place"},
  {"table": "s21", "label": "beta(13)", "printed": "0.9999997", "recomputed": "0.9999994",
   "note": "decimal expansion of the closed form is 3 units high in the 7th place"},
  {"table": "s28", "label": "W(5)", "printed": "0.0038602", "recomputed": "0.0038581",
   "note": "disagrees with Q = 1 - C = 0.0038581 obtained in the n = 5 computation"},
  {"table": "s17", "label": "prime 7, fifth-power term", "printed": "1/(5*7^7)", "recomputed": "1/(5*7^5)",
   "note": "exponent misprint in the per-prime expansion of (1/2) l(8/6)"},
  {"table": "s18", "label": "P, cube of 7", "printed": "-1/7^3", "recomputed": "+1/7^3",
   "note": "7 = 4n-1 carries +; the W(n) table restates the series with +1/7^3"}
])json";

std::vector<ErratumEntry> parse_manifest() {
  std::vector<ErratumEntry> out;
  for (const auto& e : nlohmann::json::parse(kManifest)) {
    out.push_back(ErratumEntry{e.at("table").get<std::string>(), e.at("label").get<std::string>(),
                               e.at("printed").get<std::string>(),
                               e.at("recomputed").get<std::string>(),
                               e.at("note").get<std::string>()});
  }
  return out;
}

}  // namespace

const std::vector<ErratumEntry>& errata_manifest() {
  static const std::vector<ErratumEntry> manifest = parse_manifest();
  return manifest;
}

const ErratumEntry* find_erratum(std::string_view table_id, std::string_view label) {
  for (const auto& e : errata_manifest()) {
    if (e.table_id == table_id && e.label == label) return &e;
  }
  return nullptr;
}

}  // namespace charprime
