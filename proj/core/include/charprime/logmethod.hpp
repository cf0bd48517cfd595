#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charprime/arith.hpp"
#include "charprime/primes.hpp"
#include "charprime/series_value.hpp"

namespace charprime::logmethod {

enum class EulerProduct {
  pi_over_4,          // prod p / (p - chi4(p))
  pi_squared_over_8,  // prod p^2 / ((p - 1)(p + 1))
  two,                // prod (p - chi4(p)) / (p + chi4(p))
};

/// The exact rational factor contributed by one prime.
[[nodiscard]] mpq_class factor(EulerProduct kind, const PrimeChar& prime);

struct ProductSeries {
  EulerProduct kind = EulerProduct::pi_over_4;
  std::vector<HighPrecReal> partials;
  /// Last partial. Rigorous only for the absolutely convergent pi^2/8
  /// product, whose error includes the tail over the remaining primes.
  SeriesValue final;
};

[[nodiscard]] ProductSeries product_pi4(std::size_t num_primes, Precision prec);
[[nodiscard]] ProductSeries product_pi2_8(std::size_t num_primes, Precision prec);
[[nodiscard]] ProductSeries product_two(std::size_t num_primes, Precision prec);

/// Exact partial products for the first `count` primes.
[[nodiscard]] std::vector<mpq_class> exact_partials(EulerProduct kind, std::size_t count);

struct WOptions {
  Precision prec{};
  std::size_t max_primes = 10000;
};

/// W(n) for odd n >= 3 with err < 10^-digits. Uses the fewest exclusion
/// steps whose composite tail is small enough, or 1 - beta(n) when n >= 9
/// and 2 * 9^-n < 10^-digits.
[[nodiscard]] SeriesValue w_value(int n, int digits, const WOptions& options = {});

struct AssemblyOptions {
  Precision prec{};
  std::size_t prime_depth = 10000;
  unsigned threads = 1;
  /// Columns switch from exclusion to 1 - beta(n) once 2 * 9^-n < 10^-complement_digits.
  int complement_digits = 10;
};

struct AssemblyStep {
  int k = 0;  // column index: n = 2k + 1
  SeriesValue w;
  HighPrecReal running;  // (1/2) ln 2 - sum_{j<=k} W(2j+1)/(2j+1)
};

struct Assembly {
  SeriesValue o;  // W(1), err includes the analytic tail
  std::vector<AssemblyStep> trace;
  HighPrecReal tail_bound;
};

/// O = (1/2) ln 2 - sum_{k=1..max_k} W(2k+1)/(2k+1). Throws PrecisionError
/// naming the achievable digits if the result is not certified to `digits`.
[[nodiscard]] Assembly assemble_O(int max_k, int digits, const AssemblyOptions& options = {});
/// Same without the certification check.
[[nodiscard]] Assembly assemble_O_uncertified(int max_k, const AssemblyOptions& options = {});

/// Rigorous bound on sum_{k>max_k} |W(2k+1)|/(2k+1).
[[nodiscard]] HighPrecReal analytic_tail_bound(int max_k, Precision prec);

/// (1/2) ln 2 - sum_{k=0..max_k} W(2k+1)/(2k+1), with W(1) taken from a
/// deeper assembly.
[[nodiscard]] HighPrecReal master_identity_residual(int max_k, const Assembly& deep);
[[nodiscard]] HighPrecReal master_identity_residual(int max_k, const AssemblyOptions& options = {});

struct ClosedFormCandidate {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;
  HighPrecReal residual;  // value - (ln pi - ln(num/den))
};

/// Reduced fractions N = num/den, den <= max_den, with
/// |value - (ln pi - ln N)| < tol, sorted by |residual|.
[[nodiscard]] std::vector<ClosedFormCandidate> closed_form_scan(const HighPrecReal& value,
                                                                std::uint64_t max_den, double tol);

}  // namespace charprime::logmethod
