#include "charprime/beta.hpp"

#include <cmath>
#include <string>

namespace charprime {
namespace {

void require_odd_positive(int n, const char* where) {
  if (n < 1 || n % 2 == 0) {
    throw DomainError(std::string(where) + ": argument must be an odd positive integer, got " +
                      std::to_string(n));
  }
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

EulerNumberTable euler_numbers(int count) {
  if (count < 1) throw DomainError("euler_numbers: count must be >= 1");
  std::vector<mpz_class> signed_values;
  signed_values.reserve(static_cast<std::size_t>(count));
  signed_values.emplace_back(1);
  for (int m = 1; m < count; ++m) {
    mpz_class acc = 0;
    for (int k = 0; k < m; ++k) {
      acc += binomial(2UL * m, 2UL * k) * signed_values[static_cast<std::size_t>(k)];
    }
    signed_values.push_back(-acc);
  }
  EulerNumberTable table;
  table.values.reserve(signed_values.size());
  for (const auto& e : signed_values) table.values.push_back(abs(e));
  return table;
}

mpz_class signed_euler_number(const EulerNumberTable& table, int m) {
  const mpz_class& v = table.values.at(static_cast<std::size_t>(m));
  return m % 2 == 0 ? v : mpz_class(-v);
}

BetaValue beta_closed(int n, Precision prec) {
  require_odd_positive(n, "beta_closed");
  const int m = (n - 1) / 2;
  const EulerNumberTable table = euler_numbers(m + 1);

  mpz_class denominator;
  mpz_fac_ui(denominator.get_mpz_t(), 2UL * m);
  mpz_class four_power;
  mpz_ui_pow_ui(four_power.get_mpz_t(), 4, static_cast<unsigned long>(m + 1));
  denominator *= four_power;

  const HighPrecReal pi = constant(ConstantName::pi, prec);
  HighPrecReal value = HighPrecReal::from_integer(table.values.back(), prec) *
                       pi.pow(static_cast<unsigned>(n)) /
                       HighPrecReal::from_integer(denominator, prec);
  return BetaValue{n, std::move(value)};
}

BetaValue beta_closed(int n, int digits) {
  if (digits < 1) throw DomainError("beta_closed: digits must be >= 1");
  BetaValue b = beta_closed(n, Precision{digits + 10});
  if (!b.value.certified_to(digits)) {
    throw PrecisionError("beta_closed: could not certify " + std::to_string(digits) + " digits");
  }
  return b;
}

BetaValue beta_direct(int n, long terms, Precision prec) {
  require_odd_positive(n, "beta_direct");
  if (n == 1) {
    throw DomainError("beta_direct: n = 1 converges too slowly to certify; use beta_closed");
  }
  if (terms < 1) throw DomainError("beta_direct: terms must be >= 1");

  HighPrecReal sum(prec);
  mpz_class power;
  for (long j = 0; j < terms; ++j) {
    const unsigned long m = 2UL * static_cast<unsigned long>(j) + 1;
    mpz_ui_pow_ui(power.get_mpz_t(), m, static_cast<unsigned long>(n));
    const HighPrecReal term = HighPrecReal::ratio(mpz_class(1), power, prec);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  mpz_ui_pow_ui(power.get_mpz_t(), 2UL * static_cast<unsigned long>(terms) + 1,
                static_cast<unsigned long>(n));
  return BetaValue{n, sum.widened(HighPrecReal::ratio(mpz_class(1), power, prec))};
}

long beta_direct_terms_for(int n, int decimals) {
  require_odd_positive(n, "beta_direct_terms_for");
  // (2t + 1)^n > 2 * 10^decimals
  const double target = std::log(2.0) + decimals * std::log(10.0);
  const double base = std::exp(target / n);
  const long terms = static_cast<long>(std::ceil((base - 1.0) / 2.0)) + 1;
  return terms < 1 ? 1 : terms;
}

std::vector<HighPrecReal> beta_differences(std::span<const BetaValue> values) {
  if (values.size() < 2) throw DomainError("beta_differences: need at least two values");
  std::vector<HighPrecReal> out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    out.push_back(values[i + 1].value - values[i].value);
  }
  return out;
}

}  // namespace charprime
