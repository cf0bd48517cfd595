#include "charprime/logmethod.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "charprime/beta.hpp"
#include "charprime/exclusion.hpp"
#include "charprime/parallel.hpp"

namespace charprime::logmethod {
namespace {

HighPrecReal from_rational(const mpq_class& q, Precision prec) {
  return HighPrecReal::ratio(q.get_num(), q.get_den(), prec);
}

HighPrecReal pow10_inverse(int digits, Precision prec) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  return HighPrecReal::ratio(mpz_class(1), scale, prec);
}

ProductSeries running_product(EulerProduct kind, std::size_t num_primes, Precision prec) {
  if (num_primes < 1) throw DomainError("product: num_primes must be >= 1");
  const auto primes = first_odd_primes(num_primes);
  ProductSeries out;
  out.kind = kind;
  out.partials.reserve(num_primes);
  HighPrecReal acc = HighPrecReal::from_int(1, prec);
  for (const auto& p : primes) {
    acc *= from_rational(factor(kind, p), prec);
    out.partials.push_back(acc);
  }
  out.final = SeriesValue{SeriesId::product, static_cast<int>(kind), acc, Method::direct, false};
  return out;
}

// Composite-term bound for the beta-complement shortcut.
HighPrecReal beta_complement_bound(int n, Precision prec) {
  mpz_class nine_pow;
  mpz_ui_pow_ui(nine_pow.get_mpz_t(), 9, static_cast<unsigned long>(n));
  return HighPrecReal::ratio(mpz_class(2), nine_pow, prec);
}

SeriesValue beta_complement(int n, Precision prec) {
  HighPrecReal w = HighPrecReal::from_int(1, prec) - beta_closed(n, prec).value;
  return SeriesValue{SeriesId::W, n, w.widened(beta_complement_bound(n, prec)),
                     Method::beta_complement, true};
}

void require_w_exponent(int n) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("W(n) by exclusion requires odd n >= 3, got " + std::to_string(n));
  }
}

}  // namespace

mpq_class factor(EulerProduct kind, const PrimeChar& prime) {
  const mpz_class p(static_cast<unsigned long>(prime.p));
  mpq_class q;
  switch (kind) {
    case EulerProduct::pi_over_4:
      q = mpq_class(p, p - prime.chi);
      break;
    case EulerProduct::pi_squared_over_8:
      q = mpq_class(p * p, (p - 1) * (p + 1));
      break;
    case EulerProduct::two:
      q = mpq_class(p - prime.chi, p + prime.chi);
      break;
  }
  q.canonicalize();
  return q;
}

std::vector<mpq_class> exact_partials(EulerProduct kind, std::size_t count) {
  std::vector<mpq_class> out;
  mpq_class acc = 1;
  for (const auto& p : first_odd_primes(count)) {
    acc *= factor(kind, p);
    acc.canonicalize();
    out.push_back(acc);
  }
  return out;
}

ProductSeries product_pi4(std::size_t num_primes, Precision prec) {
  return running_product(EulerProduct::pi_over_4, num_primes, prec);
}

ProductSeries product_two(std::size_t num_primes, Precision prec) {
  return running_product(EulerProduct::two, num_primes, prec);
}

ProductSeries product_pi2_8(std::size_t num_primes, Precision prec) {
  ProductSeries out = running_product(EulerProduct::pi_squared_over_8, num_primes, prec);
  // Remaining factor T = prod_{p >= q} 1/(1 - p^-2); ln T <= t with
  // t = (q^-2 + 1/(2q)) / (1 - q^-2), and T - 1 <= t / (1 - t).
  const std::uint64_t q = first_odd_primes(num_primes + 1).back().p;
  const mpz_class qz(static_cast<unsigned long>(q));
  const HighPrecReal q_inv2 = HighPrecReal::ratio(mpz_class(1), qz * qz, prec);
  const HighPrecReal one = HighPrecReal::from_int(1, prec);
  const HighPrecReal t =
      (q_inv2 + HighPrecReal::ratio(mpz_class(1), 2 * qz, prec)) / (one - q_inv2);
  const HighPrecReal tail = out.final.value * t / (one - t);
  out.final.value = out.final.value.widened(tail);
  out.final.rigorous = true;
  return out;
}

SeriesValue w_value(int n, int digits, const WOptions& options) {
  require_w_exponent(n);
  if (digits < 1) throw DomainError("w_value: digits must be >= 1");
  const Precision prec = options.prec;
  const HighPrecReal target = pow10_inverse(digits, prec);

  if (n >= 9 && beta_complement_bound(n, prec) < target) {
    SeriesValue sv = beta_complement(n, prec);
    if (sv.value.error_below(target)) return sv;
  }

  // Fewest primes whose composite tail stays below half the budget.
  const auto primes = first_odd_primes(options.max_primes + 1);
  const HighPrecReal half_target = target / HighPrecReal::from_int(2, prec);
  const double log_budget = std::log(0.5) - digits * std::log(10.0);
  std::size_t needed = 0;
  for (std::size_t k = 1; k <= options.max_primes; ++k) {
    const double q = static_cast<double>(primes[k].p);
    const double log_bound =
        (2.0 - 2.0 * n) * std::log(q) - std::log(2.0 * (n - 1)) + std::log1p(2.0 * (n - 1) / (q * q));
    if (log_bound < log_budget - 0.01 &&
        exclusion::composite_tail_bound(n, primes[k].p, prec) < half_target) {
      needed = k;
      break;
    }
  }
  if (needed == 0) {
    const HighPrecReal best = exclusion::composite_tail_bound(n, primes.back().p, prec);
    int achievable = 0;
    while (achievable < digits && best < pow10_inverse(achievable + 1, prec)) ++achievable;
    throw PrecisionError("W(" + std::to_string(n) + ") with " + std::to_string(options.max_primes) +
                         " primes is certified to about " + std::to_string(achievable) +
                         " digits, " + std::to_string(digits) + " requested");
  }
  SeriesValue sv = exclusion::run(n, needed, prec).w;
  if (!sv.value.error_below(target)) {
    throw PrecisionError("W(" + std::to_string(n) + "): working precision too low for " +
                         std::to_string(digits) + " digits");
  }
  return sv;
}

HighPrecReal analytic_tail_bound(int max_k, Precision prec) {
  if (max_k < 0) throw DomainError("analytic_tail_bound: max_k must be >= 0");
  // |W(n)| <= sum_{odd m>=3} m^-n <= 3^-n (1 + 3/(2(n-1))); summing n0, n0+2, ...
  // against 3^-n gives a factor 9/8.
  const long n0 = 2L * max_k + 3;
  mpz_class three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(n0));
  const mpz_class num = mpz_class(9) * (2 * (n0 - 1) + 3);
  const mpz_class den = mpz_class(8) * (2 * (n0 - 1)) * n0 * three_pow;
  return HighPrecReal::ratio(num, den, prec);
}

Assembly assemble_O_uncertified(int max_k, const AssemblyOptions& options) {
  if (max_k < 1) throw DomainError("assemble_O: max_k must be >= 1");
  const Precision prec = options.prec;
  const HighPrecReal switch_bound = pow10_inverse(options.complement_digits, prec);

  auto columns = parallel_map(static_cast<std::size_t>(max_k), options.threads, [&](std::size_t i) {
    const int n = 2 * static_cast<int>(i) + 3;
    if (n >= 9 && beta_complement_bound(n, prec) < switch_bound) return beta_complement(n, prec);
    return exclusion::run(n, options.prime_depth, prec).w;
  });

  Assembly out;
  HighPrecReal running = constant(ConstantName::ln2, prec) / HighPrecReal::from_int(2, prec);
  for (int k = 1; k <= max_k; ++k) {
    SeriesValue& w = columns[static_cast<std::size_t>(k - 1)];
    running -= w.value / HighPrecReal::from_int(2L * k + 1, prec);
    out.trace.push_back(AssemblyStep{k, std::move(w), running});
  }
  out.tail_bound = analytic_tail_bound(max_k, prec);
  out.o = SeriesValue{SeriesId::W, 1, running.widened(out.tail_bound), Method::log_assembly, true};
  return out;
}

Assembly assemble_O(int max_k, int digits, const AssemblyOptions& options) {
  Assembly a = assemble_O_uncertified(max_k, options);
  if (!a.o.value.certified_to(digits)) {
    throw PrecisionError("assemble_O: max_k = " + std::to_string(max_k) + " certifies " +
                         std::to_string(a.o.value.certified_decimals()) + " digits, " +
                         std::to_string(digits) + " requested");
  }
  return a;
}

HighPrecReal master_identity_residual(int max_k, const Assembly& deep) {
  if (max_k < 0) throw DomainError("master_identity_residual: max_k must be >= 0");
  if (static_cast<std::size_t>(max_k) > deep.trace.size()) {
    throw DomainError("master_identity_residual: deep assembly is shallower than max_k");
  }
  const Precision prec = deep.o.value.precision();
  HighPrecReal residual =
      constant(ConstantName::ln2, prec) / HighPrecReal::from_int(2, prec) - deep.o.value;
  for (int k = 1; k <= max_k; ++k) {
    residual -= deep.trace[static_cast<std::size_t>(k - 1)].w.value /
                HighPrecReal::from_int(2L * k + 1, prec);
  }
  return residual;
}

HighPrecReal master_identity_residual(int max_k, const AssemblyOptions& options) {
  const Assembly deep = assemble_O_uncertified(std::max(2 * max_k + 4, 12), options);
  return master_identity_residual(max_k, deep);
}

std::vector<ClosedFormCandidate> closed_form_scan(const HighPrecReal& value, std::uint64_t max_den,
                                                  double tol) {
  std::vector<ClosedFormCandidate> out;
  if (!(tol > 0.0) || max_den == 0) return out;
  const Precision prec = value.precision();
  if (!(value.error_bound() < tol / 10.0)) {
    throw PrecisionError("closed_form_scan: value error must be below tol/10");
  }
  const HighPrecReal ln_pi = constant(ConstantName::lnpi, prec);
  const double target = (ln_pi - value).to_double();  // ln N
  const double pad = 1e-12;
  const HighPrecReal tol_hp = HighPrecReal::exact_from_double(tol, prec);

  for (std::uint64_t den = 1; den <= max_den; ++den) {
    const double d = static_cast<double>(den);
    const double lo = std::ceil(d * std::exp(target - tol - pad));
    const double hi = std::floor(d * std::exp(target + tol + pad));
    for (double x = std::max(lo, 1.0); x <= hi; x += 1.0) {
      const auto num = static_cast<std::uint64_t>(x);
      if (std::gcd(num, den) != 1) continue;
      HighPrecReal residual =
          value - ln_pi +
          log(HighPrecReal::ratio(mpz_class(static_cast<unsigned long>(num)),
                                  mpz_class(static_cast<unsigned long>(den)), prec));
      if (residual.abs() < tol_hp) out.push_back(ClosedFormCandidate{num, den, std::move(residual)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ClosedFormCandidate& a, const ClosedFormCandidate& b) {
    const auto c = a.residual.abs() <=> b.residual.abs();
    if (c != 0) return c < 0;
    if (a.denominator != b.denominator) return a.denominator < b.denominator;
    return a.numerator < b.numerator;
  });
  return out;
}

}  // namespace charprime::logmethod
