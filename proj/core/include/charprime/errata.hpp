#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace charprime {

/// A known misprint. For table rows, `printed` and `recomputed` are decimal
/// strings at the printed precision; for formula misprints they describe
/// the printed and the consistent term.
struct ErratumEntry {
  std::string table_id;
  std::string label;
  std::string printed;
  std::string recomputed;
  std::string note;
};

/// The embedded allowlist, parsed once.
[[nodiscard]] const std::vector<ErratumEntry>& errata_manifest();
[[nodiscard]] const ErratumEntry* find_erratum(std::string_view table_id, std::string_view label);

}  // namespace charprime
