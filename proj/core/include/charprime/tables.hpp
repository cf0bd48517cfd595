#pragma once

#include <string_view>
#include <vector>

#include "charprime/arith.hpp"
#include "charprime/report.hpp"

// Reproduction of the printed tables. Each row's `recomputed` value replays
// the row's own formula from the printed inputs it was derived from, so an
// isolated slip shows up on exactly one row. Inputs taken from an earlier row
// of the same table are replaced by their corrected value when that row is an
// allowlisted erratum; inputs quoted from another table are used as printed.
// The `exact` column holds the fully converged value of the same quantity.
namespace charprime::tables {

enum class TableId { s12, s13, s21, s23_26, s28 };

[[nodiscard]] TableId parse_table_id(std::string_view text);
[[nodiscard]] std::string_view to_string(TableId id);
[[nodiscard]] const std::vector<TableId>& all_tables();

struct Settings {
  Precision prec{};
  std::size_t primes = 10000;
  int max_k = 10;
  unsigned threads = 1;
  int digits = 7;
  DecimalStyle decimal_style = DecimalStyle::period;
};

[[nodiscard]] report::ReportTable build(TableId id, const Settings& settings = {});
/// All tables in order, sharing one converged assembly.
[[nodiscard]] std::vector<report::ReportTable> build_all(const Settings& settings = {});

/// The W(n) table restricted to odd n <= n_max (n_max <= 13).
[[nodiscard]] report::ReportTable w_table(int n_max, const Settings& settings = {});

}  // namespace charprime::tables
