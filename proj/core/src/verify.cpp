#include "charprime/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "charprime/beta.hpp"
#include "charprime/errata.hpp"
#include "charprime/exclusion.hpp"
#include "charprime/logmethod.hpp"
#include "charprime/primes.hpp"
#include "charprime/report.hpp"
#include "charprime/tables.hpp"

namespace charprime::verify {
namespace {

using Check = std::function<GroupResult(const Settings&)>;

GroupResult ok(std::string detail) { return {"", true, std::move(detail)}; }
GroupResult fail(std::string detail) { return {"", false, std::move(detail)}; }

std::string sci(const HighPrecReal& x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x.to_double();
  return out.str();
}

HighPrecReal one(Precision prec) { return HighPrecReal::from_int(1, prec); }

// ---- arith ---------------------------------------------------------------

// A random expression over small rationals, evaluated at two precisions by
// replaying the same random choices.
struct Expr {
  enum class Op { leaf, add, sub, mul, div } op = Op::leaf;
  long num = 1;
  long den = 1;
  std::vector<Expr> kids;

  [[nodiscard]] HighPrecReal eval(Precision prec) const {
    if (op == Op::leaf) return HighPrecReal::ratio(num, den, prec);
    const auto a = kids[0].eval(prec);
    const auto b = kids[1].eval(prec);
    switch (op) {
      case Op::add:
        return a + b;
      case Op::sub:
        return a - b;
      case Op::mul:
        return a * b;
      default:
        return a / b;
    }
  }
};

Expr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<long> small(-99, 99);
  std::uniform_int_distribution<long> positive(1, 97);
  Expr e;
  const int choice = depth <= 0 ? 0 : pick(rng);
  if (choice == 0) {
    e.num = small(rng);
    e.den = positive(rng);
    return e;
  }
  e.op = static_cast<Expr::Op>(choice);
  e.kids.push_back(random_expr(rng, depth - 1));
  e.kids.push_back(random_expr(rng, depth - 1));
  return e;
}

GroupResult error_bound_soundness(const Settings& s) {
  std::mt19937_64 rng(s.seed);
  const Precision lo = s.prec;
  const Precision hi{std::min(2 * s.prec.digits, Precision::kMaxDigits)};
  int evaluated = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto expr = random_expr(rng, 5);
    HighPrecReal a;
    HighPrecReal b;
    try {
      a = expr.eval(lo);
      b = expr.eval(hi);
    } catch (const DomainError&) {
      continue;  // a divisor interval straddled zero
    }
    ++evaluated;
    const auto gap = (a - b).abs();
    if (gap.to_double() > 0 && !(gap < a.error() || gap == a.error())) {
      return fail("trial " + std::to_string(trial) + ": |x_D - x_2D| = " + sci(gap) +
                  " exceeds err " + sci(a.error()));
    }
  }
  return ok(std::to_string(evaluated) + " expression trees within their bounds");
}

GroupResult half_log_ratio_tail(const Settings& s) {
  for (long a : {3L, 5L, 7L, 10L, 29L}) {
    const auto x = HighPrecReal::from_int(a, s.prec);
    for (int t : {1, 2, 5, 10, 20}) {
      const auto gap = (half_log_ratio(x, t) - half_log_ratio(x, t + 10)).abs();
      const auto tail = half_log_ratio_tail(x, t);
      if (tail < gap) {
        return fail("a = " + std::to_string(a) + ", t = " + std::to_string(t) + ": gap " +
                    sci(gap) + " > tail " + sci(tail));
      }
    }
  }
  return ok("truncation gaps within stated tails for a in {3,5,7,10,29}");
}

GroupResult format_round_trip(const Settings& s) {
  std::mt19937_64 rng(s.seed + 1);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 999983);
  const int max_d = std::max(1, s.prec.digits - 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = HighPrecReal::ratio(num(rng), den(rng), s.prec);
    const int d = 1 + trial % std::min(max_d, 30);
    const auto back = HighPrecReal::parse(format_decimal(x, d), s.prec);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(d));
    const auto limit = HighPrecReal::ratio(mpz_class(1), 2 * scale, s.prec) + x.error() +
                       back.error();
    if (limit < (back - x).abs()) {
      return fail("round trip at " + std::to_string(d) + " decimals moved the value by " +
                  sci((back - x).abs()));
    }
  }
  return ok("200 parse(format(x, d)) round trips within half a unit");
}

// ---- primes --------------------------------------------------------------

GroupResult multiplicativity(const Settings&) {
  long pairs = 0;
  for (std::int64_t m = 1; m <= 10000; m += 2) {
    for (std::int64_t n = 1; m * n <= 10000; n += 2) {
      if (chi4(m * n) != chi4(m) * chi4(n)) {
        return fail("chi4(" + std::to_string(m * n) + ") != chi4(" + std::to_string(m) +
                    ") chi4(" + std::to_string(n) + ")");
      }
      ++pairs;
    }
  }
  return ok(std::to_string(pairs) + " odd pairs with m n <= 10^4");
}

GroupResult sieve_vs_trial(const Settings&) {
  const auto sieved = sieve_odd_primes(100000);
  std::size_t idx = 0;
  for (std::uint64_t m = 3; m <= 100000; m += 2) {
    const bool in_sieve = idx < sieved.size() && sieved[idx].p == m;
    if (in_sieve) ++idx;
    if (in_sieve != is_prime_by_trial_division(m)) {
      return fail("sieve and trial division disagree at " + std::to_string(m));
    }
  }
  return ok(std::to_string(sieved.size()) + " odd primes below 10^5 agree");
}

GroupResult smallest_factor(const Settings&) {
  for (std::uint64_t m = 3; m <= 20000; m += 2) {
    const auto p = smallest_prime_factor(m);
    if (m % p != 0 || !is_prime_by_trial_division(p)) {
      return fail("spf(" + std::to_string(m) + ") = " + std::to_string(p) + " is not a prime factor");
    }
    if (p != m && !(p * p <= m || is_prime_by_trial_division(m / p))) {
      return fail("spf(" + std::to_string(m) + ")^2 > m with composite cofactor");
    }
  }
  return ok("odd m <= 20000");
}

// ---- beta ----------------------------------------------------------------

GroupResult closed_vs_direct(const Settings& s) {
  for (int n = 3; n <= 17; n += 2) {
    const auto closed = beta_closed(n, s.prec).value;
    const auto direct = beta_direct(n, 2000, s.prec).value;
    if (!consistent(closed, direct)) {
      return fail("beta(" + std::to_string(n) + "): closed and direct differ by " +
                  sci((closed - direct).abs()));
    }
  }
  return ok("odd 3 <= n <= 17 agree within combined bounds");
}

GroupResult monotone_and_tail(const Settings& s) {
  HighPrecReal previous = HighPrecReal::from_int(0, s.prec);
  for (int n = 3; n <= 31; n += 2) {
    const auto b = beta_closed(n, s.prec).value;
    if (!(previous < b) || one(s.prec) < b) {
      return fail("beta(" + std::to_string(n) + ") breaks monotone approach to 1");
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 3, static_cast<unsigned long>(n));
    const auto bound = HighPrecReal::ratio(mpz_class(4), 3 * power, s.prec);
    if (!(one(s.prec) - b < bound)) {
      return fail("1 - beta(" + std::to_string(n) + ") exceeds (4/3) 3^-n");
    }
    previous = b;
  }
  return ok("beta(3..31) increasing, 1 - beta(n) < (4/3) 3^-n");
}

GroupResult euler_recurrence(const Settings&) {
  const auto table = euler_numbers(40);
  for (int m = 1; m < 40; ++m) {
    mpz_class sum = 0;
    for (int k = 0; k <= m; ++k) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(2 * k));
      sum += c * signed_euler_number(table, k);
    }
    if (sum != 0) return fail("recurrence residual nonzero at m = " + std::to_string(m));
  }
  return ok("sum C(2m,2k) E_2k = 0 for 1 <= m < 40");
}

// ---- exclusion -----------------------------------------------------------

GroupResult step_equivalence(const Settings& s) {
  const auto primes = first_odd_primes(std::min<std::size_t>(s.primes, 40));
  for (int n : {1, 3, 5, 7, 9}) {
    auto a = exclusion::init(n, s.prec);
    auto b = exclusion::init(n, s.prec);
    for (const auto& p : primes) {
      a = exclusion::step(std::move(a), p);
      b = exclusion::step_closed_form(std::move(b), p);
      const auto slack = HighPrecReal::from_int(10, s.prec) * (a.value.error() + b.value.error());
      if (slack < (a.value - b.value).abs()) {
        return fail("n = " + std::to_string(n) + ", p = " + std::to_string(p.p) +
                    ": routes differ by " + sci((a.value - b.value).abs()));
      }
    }
  }
  return ok(std::to_string(primes.size()) + " steps for n in {1,3,5,7,9}");
}

GroupResult oracle_equivalence(const Settings& s) {
  const std::size_t steps = std::min<std::size_t>(s.primes, 6);
  for (int n : {3, 5, 7}) {
    auto state = exclusion::init(n, s.prec);
    for (std::size_t k = 1; k <= steps; ++k) {
      state = exclusion::step(std::move(state));
      const auto oracle = exclusion::sieved_tail_oracle(n, k, 20001, s.prec);
      const auto survivors = state.value - state.partial;
      if (!consistent(survivors, oracle)) {
        return fail("n = " + std::to_string(n) + ", step " + std::to_string(k) +
                    ": V - s differs from the sieved sum by " + sci((survivors - oracle).abs()));
      }
    }
  }
  return ok(std::to_string(steps) + " steps for n in {3,5,7} match the sieved sums");
}

GroupResult sign_rule(const Settings& s) {
  for (const auto& p : first_odd_primes(std::min<std::size_t>(s.primes, 1000))) {
    for (int n : {1, 3, 5}) {
      if (exclusion::multiplier(n, p, s.prec).sign() != -p.chi) {
        return fail("multiplier sign wrong at p = " + std::to_string(p.p));
      }
    }
  }
  return ok("multiplier sign is -chi4(p)");
}

// ---- logmethod -----------------------------------------------------------

logmethod::AssemblyOptions assembly_options(const Settings& s, std::size_t depth) {
  logmethod::AssemblyOptions opts;
  opts.prec = s.prec;
  opts.prime_depth = depth;
  opts.threads = s.threads;
  return opts;
}

GroupResult complement_consistency(const Settings& s) {
  for (int n : {9, 11, 13}) {
    const auto w = exclusion::run(n, s.primes, s.prec).w.value;
    const auto complement = one(s.prec) - beta_closed(n, s.prec).value;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 9, static_cast<unsigned long>(n));
    const auto allowed = HighPrecReal::ratio(mpz_class(2), power, s.prec) + w.error() +
                         complement.error();
    if (allowed < (w - complement).abs()) {
      return fail("n = " + std::to_string(n) + ": |W - (1 - beta)| = " +
                  sci((w - complement).abs()) + " > 2 9^-n + err");
    }
  }
  return ok("n in {9,11,13} within 2 9^-n");
}

GroupResult product_log_consistency(const Settings& s) {
  const std::size_t count = std::min<std::size_t>(s.primes, 50);
  const auto product = logmethod::product_two(count, s.prec);
  const auto lhs = log(product.partials.back());
  HighPrecReal rhs = HighPrecReal::from_int(0, s.prec);
  for (const auto& p : first_odd_primes(count)) {
    const auto term = half_log_ratio(HighPrecReal::from_int(static_cast<long>(p.p), s.prec), 60);
    rhs += p.chi < 0 ? term : -term;
  }
  rhs = HighPrecReal::from_int(2, s.prec) * rhs;
  if (!consistent(lhs, rhs)) {
    return fail("ln of the quotient-2 partial differs from the per-prime expansions by " +
                sci((lhs - rhs).abs()));
  }
  return ok("ln product over " + std::to_string(count) + " primes matches per-prime series");
}

GroupResult product_first_factors(const Settings&) {
  using logmethod::EulerProduct;
  const auto pi4 = logmethod::exact_partials(EulerProduct::pi_over_4, 2);
  const auto two = logmethod::exact_partials(EulerProduct::two, 2);
  const auto pi28 = logmethod::exact_partials(EulerProduct::pi_squared_over_8, 2);
  if (pi4.back() != mpq_class(15, 16)) return fail("pi/4 product: " + pi4.back().get_str());
  if (two.back() != mpq_class(4, 3)) return fail("quotient-2 product: " + two.back().get_str());
  if (pi28.back() != mpq_class(75, 64)) return fail("pi^2/8 product: " + pi28.back().get_str());
  return ok("first two factors give 15/16, 4/3 and 75/64 exactly");
}

GroupResult assembly_stability(const Settings& s) {
  const auto base = logmethod::assemble_O_uncertified(s.max_k, assembly_options(s, s.primes));
  const auto deep =
      logmethod::assemble_O_uncertified(2 * s.max_k, assembly_options(s, 2 * s.primes));
  if (!consistent(base.o.value, deep.o.value)) {
    return fail("O at (max_k, primes) and doubled depths differ by " +
                sci((base.o.value - deep.o.value).abs()));
  }
  // Successive running values differ by exactly W(2k+1)/(2k+1).
  HighPrecReal previous =
      constant(ConstantName::ln2, s.prec) / HighPrecReal::from_int(2, s.prec);
  for (const auto& step : base.trace) {
    const auto expected = previous - step.w.value / HighPrecReal::from_int(2 * step.k + 1, s.prec);
    if (!consistent(expected, step.running)) {
      return fail("running value at k = " + std::to_string(step.k) + " is off");
    }
    previous = step.running;
  }
  return ok("doubling depths moves O by " + sci((base.o.value - deep.o.value).abs()) +
            " (bounds " + sci(base.o.value.error()) + ")");
}

GroupResult master_identity(const Settings& s) {
  const auto deep = logmethod::assemble_O_uncertified(12, assembly_options(s, s.primes));
  for (int k : {2, 4, 6}) {
    const auto residual = logmethod::master_identity_residual(k, deep);
    const auto tail = logmethod::analytic_tail_bound(k, s.prec);
    if (tail + residual.error() < residual.abs()) {
      return fail("max_k = " + std::to_string(k) + ": residual " + sci(residual) +
                  " exceeds tail bound " + sci(tail));
    }
  }
  return ok("residuals for max_k in {2,4,6} within the analytic tail");
}

GroupResult o_above_one_third(const Settings& s) {
  const auto o = logmethod::assemble_O_uncertified(s.max_k, assembly_options(s, s.primes)).o.value;
  const auto third = HighPrecReal::ratio(1, 3, s.prec);
  const auto margin = HighPrecReal::ratio(16, 10000, s.prec);
  if (!(o - third > margin)) return fail("O - 1/3 = " + sci(o - third) + " <= 0.0016");
  if (!(o - o.error() > third)) return fail("O is not certified above 1/3");
  if (!(one(s.prec) - o < HighPrecReal::ratio(669, 1000, s.prec))) return fail("1 - O >= 0.669");
  return ok("O - 1/3 = " + sci(o - third) + ", 1 - O < 0.669");
}

// ---- errata and reproduction ---------------------------------------------

GroupResult formula_misprints(const Settings& s) {
  // The prime-7 line expands (1/2) ln(8/6) = 1/7 + 1/(3 7^3) + 1/(5 7^5) + ...
  // With the right third term the remainder is positive and below the tail
  // after three terms; with 1/(5 7^7) it is far larger.
  const auto seven = HighPrecReal::from_int(7, s.prec);
  const auto half_log = log(HighPrecReal::ratio(4, 3, s.prec)) / HighPrecReal::from_int(2, s.prec);
  auto inverse = [&](long factor, unsigned exponent) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 7, exponent);
    return HighPrecReal::ratio(mpz_class(1), factor * power, s.prec);
  };
  const auto head = inverse(1, 1) + inverse(3, 3);
  const auto remainder = half_log - head - inverse(5, 5);
  const auto misprinted = half_log - head - inverse(5, 7);
  const auto tail = half_log_ratio_tail(seven, 3);
  if (remainder.sign() < 0 || tail + remainder.error() < remainder) {
    return fail("1/(5 7^5) does not fit the expansion of (1/2) ln(8/6)");
  }
  if (!(tail + misprinted.error() < misprinted)) {
    return fail("1/(5 7^7) unexpectedly fits the expansion of (1/2) ln(8/6)");
  }
  if (make_prime_char(7).title_sign() != 1) return fail("7 does not carry + in W(n)");
  if (find_erratum("s17", "prime 7, fifth-power term") == nullptr ||
      find_erratum("s18", "P, cube of 7") == nullptr) {
    return fail("formula misprints missing from the manifest");
  }
  return ok("1/(5 7^5) and +1/7^3 confirmed; both misprints are in the manifest");
}

tables::Settings table_settings(const Settings& s, unsigned threads) {
  tables::Settings t;
  t.prec = s.prec;
  t.primes = s.primes;
  t.max_k = s.max_k;
  t.threads = threads;
  return t;
}

GroupResult table_reproduction(const Settings& s) {
  const auto all = tables::build_all(table_settings(s, s.threads));
  std::size_t errata = 0;
  for (const auto& t : all) {
    for (const auto& row : t.rows) {
      if (row.verdict == report::Verdict::mismatch) {
        return fail(t.table_id + " " + row.label + ": printed " + row.printed + ", recomputed " +
                    row.recomputed);
      }
      if (row.verdict == report::Verdict::erratum) ++errata;
    }
  }
  std::size_t table_entries = 0;
  for (const auto& e : errata_manifest()) {
    for (const auto& t : all) table_entries += t.table_id == e.table_id ? 1 : 0;
  }
  if (errata != table_entries) {
    return fail(std::to_string(errata) + " rows flagged but the manifest lists " +
                std::to_string(table_entries));
  }
  return ok("all tables reproduce; " + std::to_string(errata) + " allowlisted errata flagged");
}

GroupResult json_round_trip(const Settings& s) {
  auto settings = table_settings(s, s.threads);
  for (auto style : {DecimalStyle::period, DecimalStyle::euler_comma}) {
    settings.decimal_style = style;
    const auto table = tables::build(tables::TableId::s13, settings);
    const auto text = report::to_json(table);
    const auto parsed = report::from_json(text);
    if (!(parsed == table) || report::to_json(parsed) != text) {
      return fail("JSON round trip is not the identity");
    }
  }
  return ok("parse then serialize is the identity in both decimal styles");
}

GroupResult thread_determinism(const Settings& s) {
  const auto single = report::to_json(tables::build_all(table_settings(s, 1)));
  const auto multi = report::to_json(tables::build_all(table_settings(s, 4)));
  if (single != multi) return fail("output differs between 1 and 4 threads");
  return ok("1 and 4 threads give byte-identical JSON");
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> groups{
      {"arith.error-bound-soundness", error_bound_soundness},
      {"arith.half-log-ratio-tail", half_log_ratio_tail},
      {"arith.format-round-trip", format_round_trip},
      {"primes.multiplicativity", multiplicativity},
      {"primes.sieve-vs-trial-division", sieve_vs_trial},
      {"primes.smallest-factor", smallest_factor},
      {"beta.closed-vs-direct", closed_vs_direct},
      {"beta.monotone-and-tail", monotone_and_tail},
      {"beta.euler-recurrence", euler_recurrence},
      {"exclusion.step-equivalence", step_equivalence},
      {"exclusion.oracle-equivalence", oracle_equivalence},
      {"exclusion.sign-rule", sign_rule},
      {"logmethod.complement-consistency", complement_consistency},
      {"logmethod.product-log-consistency", product_log_consistency},
      {"logmethod.product-first-factors", product_first_factors},
      {"logmethod.assembly-stability", assembly_stability},
      {"logmethod.master-identity", master_identity},
      {"logmethod.o-above-one-third", o_above_one_third},
      {"errata.formula-misprints", formula_misprints},
      {"report.table-reproduction", table_reproduction},
      {"report.json-round-trip", json_round_trip},
      {"report.thread-determinism", thread_determinism},
  };
  return groups;
}

}  // namespace

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, check] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

GroupResult run_group(std::string_view name, const Settings& settings) {
  for (const auto& [group, check] : registry()) {
    if (group != name) continue;
    GroupResult result;
    try {
      result = check(settings);
    } catch (const std::exception& e) {
      result = fail(std::string("threw: ") + e.what());
    }
    result.name = group;
    return result;
  }
  throw std::invalid_argument("unknown verify group '" + std::string(name) + "'");
}

std::vector<GroupResult> run_all(const Settings& settings) {
  std::vector<GroupResult> out;
  for (const auto& name : group_names()) out.push_back(run_group(name, settings));
  return out;
}

}  // namespace charprime::verify
