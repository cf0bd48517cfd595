#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace charprime {

/// An odd prime with its residue class mod 4 and the character value
/// chi4(p): +1 for p = 1 (mod 4), -1 for p = 3 (mod 4).
struct PrimeChar {
  std::uint64_t p = 3;
  int residue = 3;
  int chi = -1;

  /// Sign the prime carries in W(n): +1 exactly for primes of the form 4n-1.
  [[nodiscard]] int title_sign() const { return -chi; }

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;
};

/// chi4(m) for odd m >= 1. Throws DomainError for even or nonpositive m.
[[nodiscard]] int chi4(std::int64_t m);

/// Builds the PrimeChar record for an odd prime (primality is not rechecked).
[[nodiscard]] PrimeChar make_prime_char(std::uint64_t p);

/// All odd primes <= limit, increasing. Empty for limit < 3.
[[nodiscard]] std::vector<PrimeChar> sieve_odd_primes(std::uint64_t limit);

/// The first `count` odd primes (3, 5, 7, ...).
[[nodiscard]] std::vector<PrimeChar> first_odd_primes(std::size_t count);

/// Least prime dividing odd m >= 3, by trial division.
[[nodiscard]] std::uint64_t smallest_prime_factor(std::uint64_t m);

/// Trial-division primality, used by tests and small-limit oracles.
[[nodiscard]] bool is_prime_by_trial_division(std::uint64_t m);

}  // namespace charprime
