#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "charprime/arith.hpp"
#include "charprime/primes.hpp"
#include "charprime/series_value.hpp"

// Composite-exclusion recurrence. Starting from the full odd-number character
// series V = beta(n) and the partial prime sum s = 1, each odd prime p strips
// every remaining term whose smallest prime factor is p (except p itself):
//
//   V' = V - (chi4(p) / p^n) (V - s),   s' = s + chi4(p) / p^n.
//
// V - s is always the sum of chi4(m)/m^n over m > 1 whose smallest prime
// factor exceeds the last processed prime, so V tends to 1 - W(n).
namespace charprime::exclusion {

struct TraceEntry {
  std::size_t index = 0;  // letter index k after the step (B = 1, C = 2, ...)
  PrimeChar prime;
  HighPrecReal value;    // V after the step
  HighPrecReal partial;  // s after the step
};

struct State {
  int n = 1;
  std::size_t k = 0;
  HighPrecReal value;    // V
  HighPrecReal partial;  // s
  std::vector<TraceEntry> trace;
};

/// Letter naming step k: A, B, ..., I, K, ... (no J); lowercase for the
/// partial sums a, b, ....
[[nodiscard]] std::string letter(std::size_t k, bool lowercase = false);

/// k = 0, V = beta(n), s = 1.
[[nodiscard]] State init(int n, Precision prec);
/// Starts from an externally supplied V (for replaying printed tables).
[[nodiscard]] State init_with(int n, HighPrecReal start_value);

/// Applies the (k+1)-th odd prime.
[[nodiscard]] State step(State state);
[[nodiscard]] State step(State state, const PrimeChar& prime);

/// V' = ((p^n - chi)/p^n) V + (chi/p^n) s. Algebraically identical to step;
/// computed along a separate route for equivalence testing.
[[nodiscard]] State step_closed_form(State state, const PrimeChar& prime);

/// Multiplier applied to (V - s) at prime p: -chi4(p)/p^n.
[[nodiscard]] HighPrecReal multiplier(int n, const PrimeChar& prime, Precision prec);

struct RunResult {
  SeriesValue w;  // W(n) = 1 - V_final
  State state;
};

/// Runs `num_primes` steps. For n >= 3 the error of W includes the rigorous
/// bound on the surviving composite terms; for n = 1 it is the last step's
/// change and the result is flagged non-rigorous.
[[nodiscard]] RunResult run(int n, std::size_t num_primes, Precision prec);
/// Same, starting from an explicit V. The result is 1 - V_final of that
/// replay; no analytic tail is claimed and it is flagged non-rigorous.
[[nodiscard]] RunResult run_from(int n, HighPrecReal start_value, std::size_t num_primes);

/// Bound on sum over odd m >= q^2 of m^-n: q^-2n + q^(2-2n) / (2(n-1)).
[[nodiscard]] HighPrecReal composite_tail_bound(int n, std::uint64_t next_prime, Precision prec);

/// Sum of chi4(m)/m^n over odd 3 <= m <= limit whose smallest prime factor
/// exceeds the k-th odd prime, by brute force; err includes limit^(1-n)/(n-1).
[[nodiscard]] HighPrecReal sieved_tail_oracle(int n, std::size_t k, std::uint64_t limit,
                                              Precision prec);

/// Trace rows (prime, letter, index, V, s, err) as CSV with a header row.
[[nodiscard]] std::string trace_to_csv(const State& state, int decimals,
                                       DecimalStyle style = DecimalStyle::period);
[[nodiscard]] std::string trace_to_json(const State& state, int decimals,
                                        DecimalStyle style = DecimalStyle::period);

}  // namespace charprime::exclusion
