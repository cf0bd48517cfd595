#include "cli/commands.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charprime/beta.hpp"
#include "charprime/logmethod.hpp"
#include "charprime/report.hpp"
#include "charprime/tables.hpp"
#include "charprime/verify.hpp"

namespace charprime::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) line += ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      line += f;
    } else {
      line += '"';
      for (char c : f) line += c == '"' ? std::string("\"\"") : std::string(1, c);
      line += '"';
    }
  }
  return line + "\r\n";
}

Precision working(const RunConfig& config) { return Precision{config.working_digits}; }

tables::Settings table_settings(const RunConfig& config) {
  tables::Settings s;
  s.prec = working(config);
  s.primes = config.primes;
  s.max_k = config.max_k;
  s.threads = config.threads;
  s.digits = config.digits;
  s.decimal_style = config.decimal_style;
  return s;
}

logmethod::AssemblyOptions assembly_options(const RunConfig& config) {
  logmethod::AssemblyOptions opts;
  opts.prec = working(config);
  opts.prime_depth = config.primes;
  opts.threads = config.threads;
  return opts;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

void validate(const RunConfig& config, bool require_margin) {
  if (config.digits < 1) throw UsageError("--digits must be >= 1");
  if (config.primes < 1) throw UsageError("--primes must be >= 1");
  if (config.max_k < 1) throw UsageError("--max-k must be >= 1");
  if (config.threads < 1) throw UsageError("--threads must be >= 1");
  if (config.working_digits < 1 || config.working_digits > Precision::kMaxDigits) {
    throw UsageError("--working-digits must be in [1, " + std::to_string(Precision::kMaxDigits) +
                     "]");
  }
  if (require_margin && config.working_digits < config.digits + 10) {
    throw UsageError("--working-digits (" + std::to_string(config.working_digits) +
                     ") must be at least --digits + 10 (" + std::to_string(config.digits + 10) +
                     ")");
  }
}

int cmd_compute(std::string_view series, int n, const RunConfig& config, std::ostream& out) {
  validate(config, true);
  if (n < 1 || n % 2 == 0) throw DomainError("n must be odd and >= 1, got " + std::to_string(n));

  SeriesValue sv;
  if (series == "beta") {
    sv = SeriesValue{SeriesId::beta, n, beta_closed(n, working(config)).value, Method::direct, true};
  } else if (series == "W") {
    if (n == 1) {
      sv = logmethod::assemble_O(config.max_k, config.digits, assembly_options(config)).o;
    } else {
      // One extra digit turns err < 10^-(d+1) into a certified rounding at d.
      sv = logmethod::w_value(n, config.digits + 1,
                              logmethod::WOptions{working(config), config.primes});
    }
  } else {
    throw UsageError("unknown series '" + std::string(series) + "' (expected W or beta)");
  }

  const std::string label = std::string(to_string(sv.series)) + "(" + std::to_string(n) + ")";
  const std::string value = format_decimal(sv.value, config.digits, config.decimal_style);
  const std::string method(to_string(sv.method));
  const int certified = sv.value.certified_decimals();
  const std::string bound = scientific(sv.value.error_bound());

  switch (config.format) {
    case Format::text:
      out << label << " = " << value << '\n'
          << "method: " << method << '\n'
          << "rigorous: " << (sv.rigorous ? "yes" : "no (empirical error estimate)") << '\n'
          << "certified digits: " << certified << '\n'
          << "error bound: " << bound << '\n';
      break;
    case Format::csv:
      out << csv_line({"series", "n", "value", "method", "rigorous", "certified_digits",
                       "error_bound"})
          << csv_line({std::string(to_string(sv.series)), std::to_string(n), value, method,
                       sv.rigorous ? "true" : "false", std::to_string(certified), bound});
      break;
    case Format::json: {
      ojson j;
      j["series"] = std::string(to_string(sv.series));
      j["n"] = n;
      j["value"] = value;
      j["method"] = method;
      j["rigorous"] = sv.rigorous;
      j["certified_digits"] = certified;
      j["error_bound"] = bound;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_reproduce(std::string_view table, const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  validate(config, true);
  const auto settings = table_settings(config);
  std::vector<report::ReportTable> built;
  const bool all = table == "all";
  if (all) {
    built = tables::build_all(settings);
  } else {
    built.push_back(tables::build(tables::parse_table_id(table), settings));
  }

  switch (config.format) {
    case Format::text:
      for (std::size_t i = 0; i < built.size(); ++i) {
        if (i != 0) out << '\n';
        out << report::to_text(built[i]);
      }
      break;
    case Format::csv:
      for (std::size_t i = 0; i < built.size(); ++i) {
        std::string csv = report::to_csv(built[i]);
        if (i != 0) csv.erase(0, csv.find("\r\n") + 2);  // one header for all tables
        out << csv;
      }
      break;
    case Format::json:
      out << (all ? report::to_json(built) : report::to_json(built.front()));
      break;
  }

  int code = kOk;
  for (const auto& t : built) {
    for (const auto& row : t.rows) {
      if (row.verdict != report::Verdict::mismatch) continue;
      err << "mismatch: " << t.table_id << " " << row.label << ": printed " << row.printed
          << ", recomputed " << row.recomputed << '\n';
      code = kFailed;
    }
  }
  return code;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config, false);
  verify::Settings s;
  s.prec = working(config);
  s.primes = config.primes;
  s.max_k = config.max_k;
  s.threads = config.threads;
  const auto results = verify::run_all(s);

  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed;
  switch (config.format) {
    case Format::text:
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
      }
      break;
    case Format::csv:
      out << csv_line({"group", "passed", "detail"});
      for (const auto& r : results) out << csv_line({r.name, r.passed ? "true" : "false", r.detail});
      break;
    case Format::json: {
      ojson j;
      j["passed"] = passed;
      j["groups"] = ojson::array();
      for (const auto& r : results) {
        j["groups"].push_back(ojson{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  for (const auto& r : results) {
    if (!r.passed) err << "invariant failed: " << r.name << ": " << r.detail << '\n';
  }
  return passed ? kOk : kFailed;
}

int cmd_scan(const std::optional<std::string>& value, std::uint64_t max_den, double tol,
             const RunConfig& config, std::ostream& out) {
  validate(config, true);
  HighPrecReal x;
  if (value) {
    try {
      x = HighPrecReal::parse(*value, working(config));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--value: ") + e.what());
    }
  } else {
    x = logmethod::assemble_O_uncertified(config.max_k, assembly_options(config)).o.value;
  }
  const auto candidates = logmethod::closed_form_scan(x, max_den, tol);

  auto fraction = [](const logmethod::ClosedFormCandidate& c) {
    return std::to_string(c.numerator) + "/" + std::to_string(c.denominator);
  };
  switch (config.format) {
    case Format::text:
      if (candidates.empty()) out << "no candidate found\n";
      for (const auto& c : candidates) {
        out << "N = " << fraction(c) << "  residual = " << scientific(c.residual.to_double()) << '\n';
      }
      break;
    case Format::csv:
      out << csv_line({"numerator", "denominator", "residual"});
      for (const auto& c : candidates) {
        out << csv_line({std::to_string(c.numerator), std::to_string(c.denominator),
                         scientific(c.residual.to_double())});
      }
      break;
    case Format::json: {
      ojson arr = ojson::array();
      for (const auto& c : candidates) {
        arr.push_back(ojson{{"numerator", c.numerator},
                            {"denominator", c.denominator},
                            {"residual", scientific(c.residual.to_double())}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime character series W(n): compute, reproduce tables, verify, scan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::library_version());

  RunConfig config;
  std::string format = "text";
  std::string style = "period";
  app.add_option("--digits", config.digits, "Output decimals")->capture_default_str();
  app.add_option("--working-digits", config.working_digits, "Internal precision in digits")
      ->envname("CHARPRIME_WORKING_DIGITS")
      ->capture_default_str();
  app.add_option("--primes", config.primes, "Exclusion depth (number of odd primes)")
      ->capture_default_str();
  app.add_option("--max-k", config.max_k, "Assembly depth (columns n = 3 .. 2k+1)")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--decimal-style", style, "Decimal mark")
      ->check(CLI::IsMember({"period", "euler-comma"}))
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads; output does not depend on it")
      ->capture_default_str();

  std::string series;
  int n = 0;
  auto* compute = app.add_subcommand("compute", "Compute W(n) or beta(n)")->fallthrough();
  compute->add_option("series", series, "W or beta")->required()->check(CLI::IsMember({"W", "beta"}));
  compute->add_option("n", n, "Odd exponent")->required();

  std::string table = "all";
  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a printed table with verdicts")
                        ->fallthrough();
  reproduce->add_option("table,--table", table, "s12, s13, s21, s23_26, s28 or all")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites")->fallthrough();

  std::optional<std::string> scan_value;
  std::uint64_t max_den = 1000;
  double tol = 1e-7;
  auto* scan = app.add_subcommand("scan", "Search ln(pi) - ln(N) for rational N")->fallthrough();
  scan->add_option("--value", scan_value, "Decimal value to scan (default: assembled W(1))");
  scan->add_option("--max-den", max_den, "Largest denominator")->capture_default_str();
  scan->add_option("--tol", tol, "Residual tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    config.format = parse_format(format);
    config.decimal_style = parse_decimal_style(style);
    if (compute->parsed()) return cmd_compute(series, n, config, out);
    if (reproduce->parsed()) return cmd_reproduce(table, config, out, err);
    if (verify_cmd->parsed()) return cmd_verify(config, out, err);
    if (scan->parsed()) return cmd_scan(scan_value, max_den, tol, config, out);
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace charprime::cli
