#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "charprime/arith.hpp"

namespace charprime::cli {

enum class Format { text, csv, json };

[[nodiscard]] Format parse_format(std::string_view name);

struct RunConfig {
  int digits = 7;
  int working_digits = Precision::kDefaultDigits;
  std::size_t primes = 10000;
  int max_k = 10;
  Format format = Format::text;
  DecimalStyle decimal_style = DecimalStyle::period;
  unsigned threads = 1;
};

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,     // a reproduced row mismatched or a verify group failed
  kUsage = 2,      // malformed arguments or configuration
  kPrecision = 3,  // the requested digits cannot be certified
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Depths >= 1, digits >= 1, working digits within the backend range and,
/// when `require_margin` is set, at least digits + 10.
void validate(const RunConfig& config, bool require_margin);

int cmd_compute(std::string_view series, int n, const RunConfig& config, std::ostream& out);
int cmd_reproduce(std::string_view table, const RunConfig& config, std::ostream& out,
                  std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const std::optional<std::string>& value, std::uint64_t max_den, double tol,
             const RunConfig& config, std::ostream& out);

/// Parses argv and dispatches; maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charprime::cli
