#include "charprime/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace charprime {
namespace {

constexpr mpfr_prec_t kErrBits = 64;
constexpr double kLog2Of10 = 3.32192809488736234787;

// 64-bit scratch register for error-bound arithmetic.
struct Scratch {
  Scratch() {
    mpfr_init2(v, kErrBits);
    mpfr_set_zero(v, 1);
  }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  mpfr_t v;
};

Precision precision_for_bits(mpfr_prec_t bits) {
  const int digits = static_cast<int>(std::floor(static_cast<double>(bits - 16) / kLog2Of10));
  return Precision{std::max(digits, 1)};
}

// 0.5 * 10^-decimals, rounded down.
void half_unit(mpfr_t out, int decimals) {
  mpfr_set_ui(out, 10, MPFR_RNDD);
  mpfr_pow_si(out, out, -decimals, MPFR_RNDD);
  mpfr_div_2ui(out, out, 1, MPFR_RNDD);
}

bool is_well_formed_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++mantissa_digits;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++mantissa_digits;
    }
  }
  if (mantissa_digits == 0) return false;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exponent_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++exponent_digits;
    }
    if (exponent_digits == 0) return false;
  }
  return i == text.size();
}

}  // namespace

mpfr_prec_t Precision::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

HighPrecReal::HighPrecReal(Precision prec) : HighPrecReal(Uninit{}, prec.bits()) {
  mpfr_set_zero(value_, 1);
}

HighPrecReal::HighPrecReal(Uninit, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_init2(err_, kErrBits);
  mpfr_set_zero(err_, 1);
}

HighPrecReal::HighPrecReal(const HighPrecReal& other)
    : HighPrecReal(Uninit{}, mpfr_get_prec(other.value_)) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
  mpfr_set(err_, other.err_, MPFR_RNDU);
}

HighPrecReal::HighPrecReal(HighPrecReal&& other) noexcept : HighPrecReal(Uninit{}, MPFR_PREC_MIN) {
  mpfr_set_zero(value_, 1);
  mpfr_swap(value_, other.value_);
  mpfr_swap(err_, other.err_);
}

HighPrecReal& HighPrecReal::operator=(const HighPrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    mpfr_set(err_, other.err_, MPFR_RNDU);
  }
  return *this;
}

HighPrecReal& HighPrecReal::operator=(HighPrecReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  mpfr_swap(err_, other.err_);
  return *this;
}

HighPrecReal::~HighPrecReal() {
  mpfr_clear(value_);
  mpfr_clear(err_);
}

void HighPrecReal::add_rounding_error(int ternary) {
  if (ternary == 0) return;
  // |rounded - exact| <= ulp/2 <= |rounded| * 2^(1 - prec)
  Scratch t;
  mpfr_abs(t.v, value_, MPFR_RNDU);
  mpfr_mul_2si(t.v, t.v, 1 - static_cast<long>(mpfr_get_prec(value_)), MPFR_RNDU);
  mpfr_add(err_, err_, t.v, MPFR_RNDU);
}

HighPrecReal HighPrecReal::from_int(long value, Precision prec) {
  HighPrecReal r(Uninit{}, prec.bits());
  r.add_rounding_error(mpfr_set_si(r.value_, value, MPFR_RNDN));
  return r;
}

HighPrecReal HighPrecReal::from_integer(const mpz_class& value, Precision prec) {
  HighPrecReal r(Uninit{}, prec.bits());
  r.add_rounding_error(mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN));
  return r;
}

HighPrecReal HighPrecReal::ratio(long num, long den, Precision prec) {
  return ratio(mpz_class(num), mpz_class(den), prec);
}

HighPrecReal HighPrecReal::ratio(const mpz_class& num, const mpz_class& den, Precision prec) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  HighPrecReal r(Uninit{}, prec.bits());
  r.add_rounding_error(mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN));
  return r;
}

HighPrecReal HighPrecReal::parse(std::string_view text, Precision prec) {
  if (!is_well_formed_decimal(text)) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  const std::string s(text);
  HighPrecReal r(Uninit{}, prec.bits());
  char* end = nullptr;
  const int ternary = mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  r.add_rounding_error(ternary);
  return r;
}

HighPrecReal HighPrecReal::exact_from_double(double value, Precision prec) {
  HighPrecReal r(Uninit{}, std::max<mpfr_prec_t>(prec.bits(), 64));
  r.add_rounding_error(mpfr_set_d(r.value_, value, MPFR_RNDN));
  return r;
}

Precision HighPrecReal::precision() const { return precision_for_bits(mpfr_get_prec(value_)); }

double HighPrecReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

int HighPrecReal::sign() const { return mpfr_sgn(value_); }

double HighPrecReal::error_bound() const {
  if (mpfr_zero_p(err_)) return 0.0;
  const double d = mpfr_get_d(err_, MPFR_RNDU);
  return d > 0.0 ? d : std::numeric_limits<double>::denorm_min();
}

HighPrecReal HighPrecReal::error() const {
  HighPrecReal r(Uninit{}, kErrBits);
  mpfr_set(r.value_, err_, MPFR_RNDN);
  return r;
}

bool HighPrecReal::is_exact() const { return mpfr_zero_p(err_) != 0; }

bool HighPrecReal::certified_to(int decimals) const {
  Scratch t;
  half_unit(t.v, decimals);
  return mpfr_less_p(err_, t.v) != 0;
}

int HighPrecReal::certified_decimals() const {
  const int cap = precision().digits;
  int d = 0;
  while (d < cap && certified_to(d + 1)) ++d;
  return d;
}

bool HighPrecReal::error_below(const HighPrecReal& bound) const {
  return mpfr_cmpabs(err_, bound.value_) < 0;
}

HighPrecReal HighPrecReal::widened(const HighPrecReal& extra) const {
  HighPrecReal r(*this);
  Scratch t;
  mpfr_abs(t.v, extra.value_, MPFR_RNDU);
  mpfr_add(t.v, t.v, extra.err_, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, t.v, MPFR_RNDU);
  return r;
}

HighPrecReal HighPrecReal::abs() const {
  HighPrecReal r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

HighPrecReal HighPrecReal::pow(unsigned exponent) const {
  HighPrecReal result(Uninit{}, mpfr_get_prec(value_));
  mpfr_set_ui(result.value_, 1, MPFR_RNDN);
  HighPrecReal base(*this);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

HighPrecReal HighPrecReal::rounded_to(Precision prec) const {
  HighPrecReal r(Uninit{}, prec.bits());
  mpfr_set(r.err_, err_, MPFR_RNDU);
  r.add_rounding_error(mpfr_set(r.value_, value_, MPFR_RNDN));
  return r;
}

HighPrecReal& HighPrecReal::operator+=(const HighPrecReal& rhs) {
  const mpfr_prec_t bits = std::max(mpfr_get_prec(value_), mpfr_get_prec(rhs.value_));
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_add(err_, err_, rhs.err_, MPFR_RNDU);
  add_rounding_error(mpfr_add(value_, value_, rhs.value_, MPFR_RNDN));
  return *this;
}

HighPrecReal& HighPrecReal::operator-=(const HighPrecReal& rhs) {
  const mpfr_prec_t bits = std::max(mpfr_get_prec(value_), mpfr_get_prec(rhs.value_));
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_add(err_, err_, rhs.err_, MPFR_RNDU);
  add_rounding_error(mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN));
  return *this;
}

HighPrecReal& HighPrecReal::operator*=(const HighPrecReal& rhs) {
  // |ab - a'b'| <= |a| eb + |b| ea + ea eb
  Scratch acc;
  Scratch t;
  mpfr_abs(acc.v, value_, MPFR_RNDU);
  mpfr_mul(acc.v, acc.v, rhs.err_, MPFR_RNDU);
  mpfr_abs(t.v, rhs.value_, MPFR_RNDU);
  mpfr_mul(t.v, t.v, err_, MPFR_RNDU);
  mpfr_add(acc.v, acc.v, t.v, MPFR_RNDU);
  mpfr_mul(t.v, err_, rhs.err_, MPFR_RNDU);
  mpfr_add(err_, acc.v, t.v, MPFR_RNDU);

  const mpfr_prec_t bits = std::max(mpfr_get_prec(value_), mpfr_get_prec(rhs.value_));
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, MPFR_RNDN);
  add_rounding_error(mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN));
  return *this;
}

HighPrecReal& HighPrecReal::operator/=(const HighPrecReal& rhs) {
  // |a/b - a'/b'| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  Scratch b_low;
  Scratch gap;
  mpfr_abs(b_low.v, rhs.value_, MPFR_RNDD);
  mpfr_sub(gap.v, b_low.v, rhs.err_, MPFR_RNDD);
  if (mpfr_sgn(gap.v) <= 0) {
    throw DomainError("division by a value whose error interval contains zero");
  }
  if (!mpfr_zero_p(err_) || !mpfr_zero_p(rhs.err_)) {
    Scratch num;
    Scratch t;
    mpfr_abs(num.v, value_, MPFR_RNDU);
    mpfr_mul(num.v, num.v, rhs.err_, MPFR_RNDU);
    mpfr_abs(t.v, rhs.value_, MPFR_RNDU);
    mpfr_mul(t.v, t.v, err_, MPFR_RNDU);
    mpfr_add(num.v, num.v, t.v, MPFR_RNDU);
    mpfr_mul(gap.v, gap.v, b_low.v, MPFR_RNDD);
    mpfr_div(err_, num.v, gap.v, MPFR_RNDU);
  }

  const mpfr_prec_t bits = std::max(mpfr_get_prec(value_), mpfr_get_prec(rhs.value_));
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, MPFR_RNDN);
  add_rounding_error(mpfr_div(value_, value_, rhs.value_, MPFR_RNDN));
  return *this;
}

HighPrecReal operator-(const HighPrecReal& x) {
  HighPrecReal r(x);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const HighPrecReal& a, const HighPrecReal& b) {
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const HighPrecReal& a, const HighPrecReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

HighPrecReal log(const HighPrecReal& x) {
  // |ln x - ln x'| <= ex / (x - ex)
  Scratch low;
  mpfr_sub(low.v, x.value_, x.err_, MPFR_RNDD);
  if (mpfr_sgn(low.v) <= 0) throw DomainError("log of a value that may be nonpositive");
  HighPrecReal r(HighPrecReal::Uninit{}, mpfr_get_prec(x.value_));
  mpfr_div(r.err_, x.err_, low.v, MPFR_RNDU);
  r.add_rounding_error(mpfr_log(r.value_, x.value_, MPFR_RNDN));
  return r;
}

bool consistent(const HighPrecReal& a, const HighPrecReal& b, double slack) {
  const mpfr_prec_t bits = std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw())) + 64;
  mpfr_t diff;
  mpfr_init2(diff, bits);
  mpfr_sub(diff, a.raw(), b.raw(), MPFR_RNDA);
  mpfr_abs(diff, diff, MPFR_RNDU);
  Scratch allowed;
  mpfr_add(allowed.v, a.raw_error(), b.raw_error(), MPFR_RNDU);
  Scratch s;
  mpfr_set_d(s.v, slack, MPFR_RNDU);
  mpfr_add(allowed.v, allowed.v, s.v, MPFR_RNDU);
  const bool ok = mpfr_lessequal_p(diff, allowed.v) != 0;
  mpfr_clear(diff);
  return ok;
}

ConstantName parse_constant_name(std::string_view name) {
  if (name == "pi") return ConstantName::pi;
  if (name == "ln2") return ConstantName::ln2;
  if (name == "lnpi") return ConstantName::lnpi;
  throw DomainError("unknown constant '" + std::string(name) + "'");
}

std::string_view to_string(ConstantName name) {
  switch (name) {
    case ConstantName::pi:
      return "pi";
    case ConstantName::ln2:
      return "ln2";
    case ConstantName::lnpi:
      return "lnpi";
  }
  return "?";
}

HighPrecReal HighPrecReal::from_backend(mpfr_srcptr value, int ternary) {
  HighPrecReal r(Uninit{}, mpfr_get_prec(value));
  mpfr_set(r.value_, value, MPFR_RNDN);
  r.add_rounding_error(ternary);
  return r;
}

HighPrecReal constant(ConstantName name, Precision prec) {
  if (prec.digits < 1 || prec.digits > Precision::kMaxDigits + 16) {
    throw PrecisionError("constant: working precision out of range");
  }
  mpfr_t v;
  mpfr_init2(v, prec.bits());
  HighPrecReal r(prec);
  switch (name) {
    case ConstantName::pi:
      r = HighPrecReal::from_backend(v, mpfr_const_pi(v, MPFR_RNDN));
      break;
    case ConstantName::ln2:
      r = HighPrecReal::from_backend(v, mpfr_const_log2(v, MPFR_RNDN));
      break;
    case ConstantName::lnpi:
      r = log(HighPrecReal::from_backend(v, mpfr_const_pi(v, MPFR_RNDN)));
      break;
  }
  mpfr_clear(v);
  return r;
}

HighPrecReal constant(ConstantName name, int digits) {
  if (digits < 1) throw DomainError("constant: digits must be positive");
  if (digits > Precision::kMaxDigits) {
    throw PrecisionError("constant: " + std::to_string(digits) + " digits exceeds the maximum of " +
                         std::to_string(Precision::kMaxDigits));
  }
  HighPrecReal r = constant(name, Precision{digits + 5});
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const HighPrecReal limit = HighPrecReal::ratio(mpz_class(1), scale, Precision{20});
  if (!r.error_below(limit)) throw PrecisionError("constant: could not certify requested digits");
  return r;
}

HighPrecReal constant(std::string_view name, int digits) {
  return constant(parse_constant_name(name), digits);
}

HighPrecReal half_log_ratio_tail(const HighPrecReal& a, int terms) {
  const Precision prec = a.precision();
  const HighPrecReal one = HighPrecReal::from_int(1, prec);
  const HighPrecReal inv = one / a;
  const HighPrecReal inv2 = inv * inv;
  const long k = 2L * terms + 1;
  return inv.pow(static_cast<unsigned>(k)) / (HighPrecReal::from_int(k, prec) * (one - inv2));
}

HighPrecReal half_log_ratio(const HighPrecReal& a, int terms) {
  if (terms < 1) throw DomainError("half_log_ratio: terms must be >= 1");
  const Precision prec = a.precision();
  const HighPrecReal one = HighPrecReal::from_int(1, prec);
  if (!(a - a.error() > one)) throw DomainError("half_log_ratio: requires a > 1");

  const HighPrecReal inv = one / a;
  const HighPrecReal inv2 = inv * inv;
  HighPrecReal power = inv;
  HighPrecReal sum(prec);
  for (int j = 0; j < terms; ++j) {
    sum += power / HighPrecReal::from_int(2L * j + 1, prec);
    power *= inv2;
  }
  return sum.widened(half_log_ratio_tail(a, terms));
}

DecimalStyle parse_decimal_style(std::string_view name) {
  if (name == "period") return DecimalStyle::period;
  if (name == "euler-comma") return DecimalStyle::euler_comma;
  throw std::invalid_argument("unknown decimal style '" + std::string(name) + "'");
}

std::string apply_decimal_style(std::string_view period_text, DecimalStyle style) {
  std::string out(period_text);
  if (style == DecimalStyle::euler_comma) {
    if (auto pos = out.find('.'); pos != std::string::npos) out[pos] = ',';
  }
  return out;
}

int decimal_places(std::string_view period_text) {
  const auto pos = period_text.find('.');
  if (pos == std::string_view::npos) return 0;
  int n = 0;
  for (std::size_t i = pos + 1; i < period_text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(period_text[i]))) break;
    ++n;
  }
  return n;
}

std::string format_decimal(const HighPrecReal& x, int decimals, DecimalStyle style,
                           bool allow_uncertified) {
  if (decimals < 0) throw DomainError("format_decimal: negative digit count");
  if (!allow_uncertified && !x.certified_to(decimals)) {
    throw PrecisionError("value is certified to " + std::to_string(x.certified_decimals()) +
                         " decimals, " + std::to_string(decimals) + " requested");
  }
  // x * 10^d is exact at this precision, so mpfr_round sees the true midpoint.
  const mpfr_prec_t bits = mpfr_get_prec(x.raw()) +
                           static_cast<mpfr_prec_t>(std::ceil(decimals * kLog2Of10)) + 8;
  mpfr_t scaled;
  mpfr_t scale;
  mpfr_init2(scaled, bits);
  mpfr_init2(scale, bits);
  mpfr_ui_pow_ui(scale, 10, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled, x.raw(), scale, MPFR_RNDN);
  mpfr_round(scaled, scaled);  // half away from zero
  mpz_class units;
  mpfr_get_z(units.get_mpz_t(), scaled, MPFR_RNDN);
  mpfr_clear(scaled);
  mpfr_clear(scale);

  const bool negative = units < 0;
  std::string digits = mpz_class(abs(units)).get_str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative) out.push_back('-');
  if (decimals == 0) {
    out += digits;
  } else {
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  }
  return apply_decimal_style(out, style);
}

}  // namespace charprime
