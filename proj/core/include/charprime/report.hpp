#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charprime/arith.hpp"

namespace charprime::report {

enum class Verdict { match, erratum, mismatch };

[[nodiscard]] std::string_view to_string(Verdict v);
[[nodiscard]] Verdict parse_verdict(std::string_view text);

/// One compared value. Numeric fields are period-style decimal strings with
/// the printed value's number of places; styling happens on output.
struct Row {
  std::string label;
  std::string printed;
  std::string recomputed;
  std::string delta;  // recomputed - printed
  Verdict verdict = Verdict::match;
  std::string exact;        // fully converged value of the same quantity, if any
  std::string exact_delta;  // exact - printed
  std::string note;

  friend bool operator==(const Row&, const Row&) = default;
};

struct TableConfig {
  int digits = 7;
  int working_digits = Precision::kDefaultDigits;
  std::size_t primes = 10000;
  int max_k = 10;
  DecimalStyle decimal_style = DecimalStyle::period;

  friend bool operator==(const TableConfig&, const TableConfig&) = default;
};

struct ReportTable {
  std::string table_id;
  std::string title;
  std::vector<Row> rows;
  TableConfig config;
  std::string version;

  /// Every row is a match or an allowlisted erratum.
  [[nodiscard]] bool passed() const;
  [[nodiscard]] const Row& row(std::string_view label) const;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

/// Last-place units allowed for a match.
inline constexpr long kMatchUnits = 2;

/// Builds a row: rounds `recomputed` (and `exact`) to the printed number of
/// places and assigns the verdict. A row deviating by more than kMatchUnits
/// is an erratum only if the allowlist has an entry with the same printed
/// value whose expected recomputation agrees within one unit.
[[nodiscard]] Row compare(std::string_view table_id, std::string label, std::string printed,
                          const HighPrecReal& recomputed,
                          const std::optional<HighPrecReal>& exact = std::nullopt);

/// (a - b) in units of the last place of `places` decimals.
[[nodiscard]] long units_between(std::string_view a, std::string_view b, int places);

[[nodiscard]] std::string library_version();

[[nodiscard]] std::string to_text(const ReportTable& table);
[[nodiscard]] std::string to_csv(const ReportTable& table);
[[nodiscard]] std::string to_json(const ReportTable& table);
[[nodiscard]] std::string to_json(const std::vector<ReportTable>& tables);
/// Inverse of to_json for a single table. Accepts either decimal style.
[[nodiscard]] ReportTable from_json(std::string_view text);

}  // namespace charprime::report
