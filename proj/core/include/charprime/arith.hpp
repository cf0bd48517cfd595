#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charprime {

/// Raised when an argument is outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a result cannot be certified to the requested number of digits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision in decimal digits. The binary precision carries 16
/// guard bits on top of the decimal request.
struct Precision {
  static constexpr int kDefaultDigits = 50;
  static constexpr int kMaxDigits = 10000;

  int digits = kDefaultDigits;

  [[nodiscard]] mpfr_prec_t bits() const;
  friend bool operator==(Precision, Precision) = default;
};

/// A real number at a working precision, together with a nonnegative
/// absolute error bound. Every arithmetic operation widens the bound by the
/// propagated input error plus its own rounding error, so the true value
/// always lies within [value - err, value + err].
///
/// The bound is kept in a separate 64-bit MPFR number that is only ever
/// rounded upward.
class HighPrecReal {
 public:
  explicit HighPrecReal(Precision prec = {});
  HighPrecReal(const HighPrecReal& other);
  HighPrecReal(HighPrecReal&& other) noexcept;
  HighPrecReal& operator=(const HighPrecReal& other);
  HighPrecReal& operator=(HighPrecReal&& other) noexcept;
  ~HighPrecReal();

  static HighPrecReal from_int(long value, Precision prec);
  static HighPrecReal from_integer(const mpz_class& value, Precision prec);
  /// num/den, rounded once.
  static HighPrecReal ratio(long num, long den, Precision prec);
  static HighPrecReal ratio(const mpz_class& num, const mpz_class& den, Precision prec);
  /// Parses a period-style decimal ("-0.3349816", "1e-7"). Throws
  /// std::invalid_argument on malformed input.
  static HighPrecReal parse(std::string_view text, Precision prec);
  /// A value with zero error, for building exact bounds.
  static HighPrecReal exact_from_double(double value, Precision prec);
  /// Wraps a backend result. `ternary` is the MPFR ternary value of the
  /// correctly rounded operation that produced `value` (0 when exact).
  static HighPrecReal from_backend(mpfr_srcptr value, int ternary);

  [[nodiscard]] Precision precision() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] int sign() const;

  /// Error bound rounded up to a double. Values below the double range are
  /// reported as the smallest positive double so a nonzero bound never reads 0.
  [[nodiscard]] double error_bound() const;
  /// The error bound as an exact HighPrecReal (err = 0).
  [[nodiscard]] HighPrecReal error() const;
  [[nodiscard]] bool is_exact() const;

  /// True when err < 0.5 * 10^-decimals.
  [[nodiscard]] bool certified_to(int decimals) const;
  /// Largest d with err < 0.5 * 10^-d, capped at the working digits.
  [[nodiscard]] int certified_decimals() const;
  /// True when err < |bound| (midpoint of bound; bound.err ignored).
  [[nodiscard]] bool error_below(const HighPrecReal& bound) const;

  /// Adds |extra| + extra.err to the error bound; used to fold in analytic
  /// truncation tails.
  [[nodiscard]] HighPrecReal widened(const HighPrecReal& extra) const;
  [[nodiscard]] HighPrecReal abs() const;
  [[nodiscard]] HighPrecReal pow(unsigned exponent) const;
  [[nodiscard]] HighPrecReal rounded_to(Precision prec) const;

  HighPrecReal& operator+=(const HighPrecReal& rhs);
  HighPrecReal& operator-=(const HighPrecReal& rhs);
  HighPrecReal& operator*=(const HighPrecReal& rhs);
  HighPrecReal& operator/=(const HighPrecReal& rhs);

  friend HighPrecReal operator+(HighPrecReal lhs, const HighPrecReal& rhs) { return lhs += rhs; }
  friend HighPrecReal operator-(HighPrecReal lhs, const HighPrecReal& rhs) { return lhs -= rhs; }
  friend HighPrecReal operator*(HighPrecReal lhs, const HighPrecReal& rhs) { return lhs *= rhs; }
  friend HighPrecReal operator/(HighPrecReal lhs, const HighPrecReal& rhs) { return lhs /= rhs; }
  friend HighPrecReal operator-(const HighPrecReal& x);

  /// Orders midpoints only; error bounds are ignored.
  friend std::partial_ordering operator<=>(const HighPrecReal& a, const HighPrecReal& b);
  friend bool operator==(const HighPrecReal& a, const HighPrecReal& b);

  friend HighPrecReal log(const HighPrecReal& x);

  [[nodiscard]] mpfr_srcptr raw() const { return value_; }
  [[nodiscard]] mpfr_srcptr raw_error() const { return err_; }

 private:
  struct Uninit {};
  HighPrecReal(Uninit, mpfr_prec_t bits);
  void add_rounding_error(int ternary);

  mpfr_t value_;
  mpfr_t err_;
};

/// |a - b| <= a.err + b.err + slack, evaluated with upward rounding.
[[nodiscard]] bool consistent(const HighPrecReal& a, const HighPrecReal& b, double slack = 0.0);

enum class ConstantName { pi, ln2, lnpi };

[[nodiscard]] ConstantName parse_constant_name(std::string_view name);
[[nodiscard]] std::string_view to_string(ConstantName name);

/// The constant at working precision `prec`.
[[nodiscard]] HighPrecReal constant(ConstantName name, Precision prec);
/// The constant with err < 10^-digits.
[[nodiscard]] HighPrecReal constant(ConstantName name, int digits);
[[nodiscard]] HighPrecReal constant(std::string_view name, int digits);

/// 1/a + 1/(3a^3) + ... through `terms` terms, i.e. (1/2) ln((a+1)/(a-1)),
/// with the geometric truncation tail folded into the error bound.
[[nodiscard]] HighPrecReal half_log_ratio(const HighPrecReal& a, int terms);
/// The tail bound used by half_log_ratio: (1/a)^(2t+1) / ((2t+1)(1 - 1/a^2)).
[[nodiscard]] HighPrecReal half_log_ratio_tail(const HighPrecReal& a, int terms);

enum class DecimalStyle { period, euler_comma };

[[nodiscard]] DecimalStyle parse_decimal_style(std::string_view name);

/// Rounds half away from zero to `decimals` places. Throws PrecisionError if
/// x.err >= 0.5 * 10^-decimals unless `allow_uncertified` is set.
[[nodiscard]] std::string format_decimal(const HighPrecReal& x, int decimals,
                                         DecimalStyle style = DecimalStyle::period,
                                         bool allow_uncertified = false);

/// Replaces the decimal mark of a period-style string for display.
[[nodiscard]] std::string apply_decimal_style(std::string_view period_text, DecimalStyle style);

/// Number of digits after the decimal point in a period-style literal.
[[nodiscard]] int decimal_places(std::string_view period_text);

}  // namespace charprime
