#include "charprime/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "charprime/errata.hpp"
#include "csv.hpp"

#ifndef CHARPRIME_VERSION
#define CHARPRIME_VERSION "0.0.0"
#endif

namespace charprime::report {
namespace {

using ojson = nlohmann::ordered_json;

std::string_view style_name(DecimalStyle style) {
  return style == DecimalStyle::euler_comma ? "euler-comma" : "period";
}

// Period-style decimal string as an integer count of 10^-places units.
mpz_class to_units(std::string_view text, int places) {
  std::string s(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.erase(0, 1);
  }
  std::string whole = s;
  std::string frac;
  if (auto pos = s.find('.'); pos != std::string::npos) {
    whole = s.substr(0, pos);
    frac = s.substr(pos + 1);
  }
  if (static_cast<int>(frac.size()) > places) {
    throw std::invalid_argument("'" + std::string(text) + "' has more than " +
                                std::to_string(places) + " decimals");
  }
  frac.append(static_cast<std::size_t>(places) - frac.size(), '0');
  const std::string digits = (whole.empty() ? "0" : whole) + frac;
  if (digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  }
  mpz_class units(digits, 10);
  return negative ? mpz_class(-units) : units;
}

std::string from_units(const mpz_class& units, int places) {
  const bool negative = units < 0;
  std::string digits = mpz_class(abs(units)).get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = negative ? "-" : "";
  const auto split = digits.size() - static_cast<std::size_t>(places);
  out += digits.substr(0, split);
  if (places > 0) out += "." + digits.substr(split);
  return out;
}

std::string difference(std::string_view a, std::string_view b, int places) {
  return from_units(to_units(a, places) - to_units(b, places), places);
}

std::string styled(const std::string& text, DecimalStyle style) {
  return apply_decimal_style(text, style);
}

std::string unstyled(std::string text) {
  std::replace(text.begin(), text.end(), ',', '.');
  return text;
}

ojson row_json(const Row& row, DecimalStyle style) {
  ojson j;
  j["label"] = row.label;
  j["printed"] = styled(row.printed, style);
  j["recomputed"] = styled(row.recomputed, style);
  j["delta"] = styled(row.delta, style);
  j["verdict"] = std::string(to_string(row.verdict));
  j["exact"] = styled(row.exact, style);
  j["exact_delta"] = styled(row.exact_delta, style);
  j["note"] = row.note;
  return j;
}

ojson table_json(const ReportTable& table) {
  const auto style = table.config.decimal_style;
  ojson j;
  j["table_id"] = table.table_id;
  j["title"] = table.title;
  j["version"] = table.version;
  ojson config;
  config["digits"] = table.config.digits;
  config["working_digits"] = table.config.working_digits;
  config["primes"] = table.config.primes;
  config["max_k"] = table.config.max_k;
  config["decimal_style"] = std::string(style_name(style));
  j["config"] = config;
  j["rows"] = ojson::array();
  for (const auto& row : table.rows) j["rows"].push_back(row_json(row, style));
  return j;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::erratum:
      return "erratum";
    case Verdict::mismatch:
      return "mismatch";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "match") return Verdict::match;
  if (text == "erratum") return Verdict::erratum;
  if (text == "mismatch") return Verdict::mismatch;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

bool ReportTable::passed() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const Row& r) { return r.verdict == Verdict::mismatch; });
}

const Row& ReportTable::row(std::string_view label) const {
  for (const auto& r : rows) {
    if (r.label == label) return r;
  }
  throw std::out_of_range("table " + table_id + " has no row '" + std::string(label) + "'");
}

long units_between(std::string_view a, std::string_view b, int places) {
  const mpz_class d = to_units(a, places) - to_units(b, places);
  if (!d.fits_slong_p()) return d > 0 ? std::numeric_limits<long>::max() : std::numeric_limits<long>::min();
  return d.get_si();
}

Row compare(std::string_view table_id, std::string label, std::string printed,
            const HighPrecReal& recomputed, const std::optional<HighPrecReal>& exact) {
  const int places = decimal_places(printed);
  Row row;
  row.label = std::move(label);
  row.printed = std::move(printed);
  row.recomputed = format_decimal(recomputed, places);
  row.delta = difference(row.recomputed, row.printed, places);
  // An exact column that cannot be certified at this depth is left blank.
  if (exact && exact->certified_to(places)) {
    row.exact = format_decimal(*exact, places);
    row.exact_delta = difference(row.exact, row.printed, places);
  }

  if (std::labs(units_between(row.recomputed, row.printed, places)) <= kMatchUnits) {
    row.verdict = Verdict::match;
    return row;
  }
  const auto* entry = find_erratum(table_id, row.label);
  if (entry != nullptr && entry->printed == row.printed &&
      std::labs(units_between(row.recomputed, entry->recomputed, places)) <= 1) {
    row.verdict = Verdict::erratum;
    row.note = entry->note;
  } else {
    row.verdict = Verdict::mismatch;
  }
  return row;
}

std::string library_version() { return CHARPRIME_VERSION; }

std::string to_text(const ReportTable& table) {
  const auto style = table.config.decimal_style;
  const std::vector<std::string> header{"label", "printed", "recomputed", "delta",
                                        "verdict", "exact", "exact_delta"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& r : table.rows) {
    cells.push_back({r.label, styled(r.printed, style), styled(r.recomputed, style),
                     styled(r.delta, style), std::string(to_string(r.verdict)),
                     styled(r.exact, style), styled(r.exact_delta, style)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream out;
  out << table.table_id << "  " << table.title << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < cells[i].size(); ++c) {
      const auto& cell = cells[i][c];
      const std::string pad(width[c] - cell.size(), ' ');
      // Labels left-aligned, numbers right-aligned so decimal marks line up.
      line += (c == 0 || c == 4 || i == 0) ? cell + pad : pad + cell;
      if (c + 1 < cells[i].size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (const auto& r : table.rows) {
    if (!r.note.empty()) out << "  " << r.label << ": " << r.note << '\n';
  }
  return out.str();
}

std::string to_csv(const ReportTable& table) {
  const auto style = table.config.decimal_style;
  std::string out = detail::csv_row({"table_id", "label", "printed", "recomputed", "delta",
                                     "verdict", "exact", "exact_delta", "note"});
  for (const auto& r : table.rows) {
    out += detail::csv_row({table.table_id, r.label, styled(r.printed, style),
                            styled(r.recomputed, style), styled(r.delta, style),
                            std::string(to_string(r.verdict)), styled(r.exact, style),
                            styled(r.exact_delta, style), r.note});
  }
  return out;
}

std::string to_json(const ReportTable& table) { return table_json(table).dump(2) + "\n"; }

std::string to_json(const std::vector<ReportTable>& tables) {
  ojson arr = ojson::array();
  for (const auto& t : tables) arr.push_back(table_json(t));
  return arr.dump(2) + "\n";
}

ReportTable from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  ReportTable table;
  table.table_id = j.at("table_id").get<std::string>();
  table.title = j.value("title", std::string{});
  table.version = j.at("version").get<std::string>();
  const auto& config = j.at("config");
  table.config.digits = config.at("digits").get<int>();
  table.config.working_digits = config.at("working_digits").get<int>();
  table.config.primes = config.at("primes").get<std::size_t>();
  table.config.max_k = config.at("max_k").get<int>();
  table.config.decimal_style = parse_decimal_style(config.at("decimal_style").get<std::string>());
  for (const auto& r : j.at("rows")) {
    Row row;
    row.label = r.at("label").get<std::string>();
    row.printed = unstyled(r.at("printed").get<std::string>());
    row.recomputed = unstyled(r.at("recomputed").get<std::string>());
    row.delta = unstyled(r.at("delta").get<std::string>());
    row.verdict = parse_verdict(r.at("verdict").get<std::string>());
    row.exact = unstyled(r.value("exact", std::string{}));
    row.exact_delta = unstyled(r.value("exact_delta", std::string{}));
    row.note = r.value("note", std::string{});
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace charprime::report
