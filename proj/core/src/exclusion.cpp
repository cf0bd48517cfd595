#include "charprime/exclusion.hpp"

#include <cstdio>
#include <string>

#include <json.hpp>

#include "charprime/beta.hpp"
#include "csv.hpp"

namespace charprime::exclusion {
namespace {

void require_odd(int n, const char* where) {
  if (n < 1 || n % 2 == 0) {
    throw DomainError(std::string(where) + ": exponent must be odd and >= 1, got " +
                      std::to_string(n));
  }
}

mpz_class int_pow(std::uint64_t base, int exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return r;
}

std::string format_error(const HighPrecReal& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x.error_bound());
  return buf;
}

}  // namespace

std::string letter(std::size_t k, bool lowercase) {
  static constexpr std::string_view kLetters = "ABCDEFGHIKLMNOPQRSTUVWXYZ";
  if (k >= kLetters.size()) return "#" + std::to_string(k);
  char c = kLetters[k];
  if (lowercase) c = static_cast<char>(c - 'A' + 'a');
  return std::string(1, c);
}

State init(int n, Precision prec) {
  require_odd(n, "exclusion::init");
  return init_with(n, beta_closed(n, prec).value);
}

State init_with(int n, HighPrecReal start_value) {
  require_odd(n, "exclusion::init_with");
  const Precision prec = start_value.precision();
  State s;
  s.n = n;
  s.k = 0;
  s.partial = HighPrecReal::from_int(1, prec);
  s.value = std::move(start_value);
  return s;
}

HighPrecReal multiplier(int n, const PrimeChar& prime, Precision prec) {
  return HighPrecReal::ratio(mpz_class(-prime.chi), int_pow(prime.p, n), prec);
}

State step(State state) {
  const PrimeChar prime = first_odd_primes(state.k + 1).back();
  return step(std::move(state), prime);
}

State step(State state, const PrimeChar& prime) {
  const Precision prec = state.value.precision();
  const HighPrecReal c = HighPrecReal::ratio(mpz_class(prime.chi), int_pow(prime.p, state.n), prec);
  state.value -= c * (state.value - state.partial);
  state.partial += c;
  state.k += 1;
  state.trace.push_back(TraceEntry{state.k, prime, state.value, state.partial});
  return state;
}

State step_closed_form(State state, const PrimeChar& prime) {
  const Precision prec = state.value.precision();
  const mpz_class power = int_pow(prime.p, state.n);
  const HighPrecReal keep = HighPrecReal::ratio(power - prime.chi, power, prec);
  const HighPrecReal carry = HighPrecReal::ratio(mpz_class(prime.chi), power, prec);
  state.value = keep * state.value + carry * state.partial;
  state.partial += carry;
  state.k += 1;
  state.trace.push_back(TraceEntry{state.k, prime, state.value, state.partial});
  return state;
}

HighPrecReal composite_tail_bound(int n, std::uint64_t next_prime, Precision prec) {
  if (n < 3) throw DomainError("composite_tail_bound: requires n >= 3");
  const mpz_class q2 = int_pow(next_prime, 2);
  mpz_class q2_pow_n;
  mpz_pow_ui(q2_pow_n.get_mpz_t(), q2.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class q2_pow_n1;
  mpz_pow_ui(q2_pow_n1.get_mpz_t(), q2.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return HighPrecReal::ratio(mpz_class(1), q2_pow_n, prec) +
         HighPrecReal::ratio(mpz_class(1), q2_pow_n1 * 2 * (n - 1), prec);
}

namespace {

RunResult run_steps(State state, std::size_t num_primes, bool analytic_start) {
  if (num_primes < 1) throw DomainError("exclusion::run: num_primes must be >= 1");
  const auto primes = first_odd_primes(num_primes + 1);
  HighPrecReal last_delta(state.value.precision());
  for (std::size_t i = 0; i < num_primes; ++i) {
    HighPrecReal before = state.value;
    state = step(std::move(state), primes[i]);
    last_delta = state.value - before;
  }
  const Precision prec = state.value.precision();
  HighPrecReal w = HighPrecReal::from_int(1, prec) - state.value;
  bool rigorous = analytic_start;
  if (state.n == 1) {
    w = w.widened(last_delta.abs());
    rigorous = false;
  } else if (analytic_start) {
    w = w.widened(composite_tail_bound(state.n, primes[num_primes].p, prec));
  }
  SeriesValue sv{SeriesId::W, state.n, std::move(w), Method::exclusion, rigorous};
  return RunResult{std::move(sv), std::move(state)};
}

}  // namespace

RunResult run(int n, std::size_t num_primes, Precision prec) {
  return run_steps(init(n, prec), num_primes, true);
}

RunResult run_from(int n, HighPrecReal start_value, std::size_t num_primes) {
  return run_steps(init_with(n, std::move(start_value)), num_primes, false);
}

HighPrecReal sieved_tail_oracle(int n, std::size_t k, std::uint64_t limit, Precision prec) {
  require_odd(n, "sieved_tail_oracle");
  if (n == 1) throw DomainError("sieved_tail_oracle: n = 1 tail is not absolutely summable");
  const std::uint64_t last_prime = k == 0 ? 1 : first_odd_primes(k).back().p;

  HighPrecReal sum(prec);
  for (std::uint64_t m = 3; m <= limit; m += 2) {
    if (smallest_prime_factor(m) <= last_prime) continue;
    const HighPrecReal term = HighPrecReal::ratio(mpz_class(1), int_pow(m, n), prec);
    if (m % 4 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const std::uint64_t cut = limit < 1 ? 1 : limit;
  const mpz_class denom = int_pow(cut, n - 1) * (n - 1);
  return sum.widened(HighPrecReal::ratio(mpz_class(1), denom, prec));
}

std::string trace_to_csv(const State& state, int decimals, DecimalStyle style) {
  std::string out = detail::csv_row({"prime", "letter", "index", "V", "s", "err"});
  for (const auto& e : state.trace) {
    out += detail::csv_row({std::to_string(e.prime.p), letter(e.index), std::to_string(e.index),
                            format_decimal(e.value, decimals, style),
                            format_decimal(e.partial, decimals, style), format_error(e.value)});
  }
  return out;
}

std::string trace_to_json(const State& state, int decimals, DecimalStyle style) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : state.trace) {
    rows.push_back({{"prime", e.prime.p},
                    {"letter", letter(e.index)},
                    {"index", e.index},
                    {"V", format_decimal(e.value, decimals, style)},
                    {"s", format_decimal(e.partial, decimals, style)},
                    {"err", format_error(e.value)}});
  }
  nlohmann::ordered_json doc = {{"n", state.n}, {"rows", rows}};
  return doc.dump(2);
}

}  // namespace charprime::exclusion
