#include "charprime/primes.hpp"

#include <cmath>
#include <string>

#include "charprime/arith.hpp"

namespace charprime {

int chi4(std::int64_t m) {
  if (m < 1 || m % 2 == 0) {
    throw DomainError("chi4: argument must be an odd positive integer, got " + std::to_string(m));
  }
  return m % 4 == 1 ? 1 : -1;
}

PrimeChar make_prime_char(std::uint64_t p) {
  const int residue = static_cast<int>(p % 4);
  return PrimeChar{p, residue, residue == 1 ? 1 : -1};
}

std::vector<PrimeChar> sieve_odd_primes(std::uint64_t limit) {
  std::vector<PrimeChar> out;
  if (limit < 3) return out;
  // composite[i] describes the odd number 2i + 1
  const std::uint64_t slots = (limit - 1) / 2 + 1;
  std::vector<bool> composite(slots, false);
  for (std::uint64_t i = 1; i < slots; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(make_prime_char(p));
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[(m - 1) / 2] = true;
  }
  return out;
}

std::vector<PrimeChar> first_odd_primes(std::size_t count) {
  if (count == 0) return {};
  const double n = static_cast<double>(count) + 1.0;
  auto limit = static_cast<std::uint64_t>(n < 6 ? 15 : n * (std::log(n) + std::log(std::log(n))) + 10);
  for (;;) {
    auto primes = sieve_odd_primes(limit);
    if (primes.size() >= count) {
      primes.resize(count);
      return primes;
    }
    limit *= 2;
  }
}

std::uint64_t smallest_prime_factor(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) {
    throw DomainError("smallest_prime_factor: argument must be odd and >= 3");
  }
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return d;
  }
  return m;
}

bool is_prime_by_trial_division(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  return smallest_prime_factor(m) == m;
}

}  // namespace charprime
