#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "charprime/arith.hpp"

namespace charprime {

/// |E_0|, |E_2|, |E_4|, ... (secant numbers), exact.
struct EulerNumberTable {
  std::vector<mpz_class> values;
};

/// First `count` secant numbers from sum_{k<=m} C(2m,2k) E_{2k} = 0, E_0 = 1.
[[nodiscard]] EulerNumberTable euler_numbers(int count);

/// Signed E_{2m} for the table entry m (E_{2m} = (-1)^m |E_{2m}|).
[[nodiscard]] mpz_class signed_euler_number(const EulerNumberTable& table, int m);

/// Dirichlet beta at an odd argument.
struct BetaValue {
  int n = 1;
  HighPrecReal value;
};

/// beta(2m+1) = |E_2m| pi^(2m+1) / (4^(m+1) (2m)!), at working precision.
[[nodiscard]] BetaValue beta_closed(int n, Precision prec);
/// As above with err < 10^-digits.
[[nodiscard]] BetaValue beta_closed(int n, int digits);

/// Alternating sum of chi4(m)/m^n over the first `terms` odd m, with the
/// first omitted term folded into the error. Rejects n = 1.
[[nodiscard]] BetaValue beta_direct(int n, long terms, Precision prec);

/// Number of terms after which the first omitted term of beta_direct is
/// below 0.5 * 10^-decimals.
[[nodiscard]] long beta_direct_terms_for(int n, int decimals);

/// Successive differences values[i+1] - values[i].
[[nodiscard]] std::vector<HighPrecReal> beta_differences(std::span<const BetaValue> values);

}  // namespace charprime
