#include "charprime/tables.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "charprime/beta.hpp"
#include "charprime/exclusion.hpp"
#include "charprime/logmethod.hpp"
#include "charprime/primes.hpp"

namespace charprime::tables {
namespace {

using report::Row;
using report::Verdict;

// ---- printed values -------------------------------------------------------

constexpr std::string_view kS12PiOver4 = "0.7853981634";
const std::vector<std::string> kS12Partials{"0.6666666666", "0.8666666666", "0.7238095238",
                                            "0.6329004329", "0.7098235098", "0.7686470392",
                                            "0.7160154603", "0.6725371994"};

const std::vector<std::string> kS13Values{"0.713864", "0.704424", "0.681247",
                                          "0.677377", "0.673956", "0.676066",
                                          "0.671193", "0.699245", "0.669358"};

// beta(3), beta(5), ..., beta(13) and their successive differences.
const std::vector<std::string> kS21Beta{"0.9689462", "0.9961578", "0.9995547",
                                        "0.9999499", "0.9999947", "0.9999997"};
const std::vector<std::string> kS21Diff{"0.0272116", "0.0033969", "0.0003952",
                                        "0.0000448", "0.0000050", "0.0000005"};

struct ExclusionBlock {
  int n;
  std::string a;
  std::vector<std::string> lower;  // b, c, ...
  std::vector<std::string> upper;  // B, C, ...
  std::string result_letter;
  std::string result;
  std::string running;
};

const std::vector<ExclusionBlock> kS23Blocks{
    {3, "0.9689462", {"0.9629630", "0.9709630", "0.9680476"},
     {"0.9677961", "0.9677574", "0.9677481", "0.9677479"}, "P", "0.0322521", "0.3358229"},
    {5, "0.9961578", {"0.9958847", "0.9962048", "0.9961453"}, {"0.9961420", "0.9961419"},
     "Q", "0.0038581", "0.3350513"},
    {7, "0.9995547", {"0.9995428"}, {"0.9995545"}, "R", "0.0004455", "0.3349877"},
};

struct ComplementRow {
  int n;
  std::string letter;
  std::string value;
  std::string quotient;
};

const std::vector<ComplementRow> kS23Complements{
    {9, "S", "0.0000501", "0.0000056"},
    {11, "T", "0.0000053", "0.0000005"},
    {13, "U", "0.0000003", "0.0000000"},
};

constexpr std::string_view kS23O = "0.3349816";

const std::vector<std::pair<int, std::string>> kS28{
    {1, "0.3349816"}, {3, "0.0322521"}, {5, "0.0038602"}, {7, "0.0004455"},
    {9, "0.0000501"}, {11, "0.0000053"}, {13, "0.0000003"}};

// ---- replay bookkeeping ---------------------------------------------------

class Replay {
 public:
  Replay(std::string table_id, Precision prec) : table_id_(std::move(table_id)), prec_(prec) {}

  void add(const std::string& label, std::string printed, const HighPrecReal& recomputed,
           const std::optional<HighPrecReal>& exact = std::nullopt) {
    Row row = report::compare(table_id_, label, std::move(printed), recomputed, exact);
    const auto& source = row.verdict == Verdict::erratum ? row.recomputed : row.printed;
    inputs_.insert_or_assign(label, HighPrecReal::parse(source, prec_));
    values_.insert_or_assign(label, recomputed);
    rows_.push_back(std::move(row));
  }

  /// The value later rows of this table build on.
  [[nodiscard]] const HighPrecReal& in(const std::string& label) const { return inputs_.at(label); }
  /// The full-precision replayed value.
  [[nodiscard]] const HighPrecReal& value(const std::string& label) const {
    return values_.at(label);
  }
  [[nodiscard]] std::vector<Row> take_rows() { return std::move(rows_); }

 private:
  std::string table_id_;
  Precision prec_;
  std::vector<Row> rows_;
  std::map<std::string, HighPrecReal> inputs_;
  std::map<std::string, HighPrecReal> values_;
};

HighPrecReal printed_value(std::string_view text, Precision prec) {
  return HighPrecReal::parse(text, prec);
}

HighPrecReal char_term(int n, const PrimeChar& prime, Precision prec) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), prime.p, static_cast<unsigned long>(n));
  return HighPrecReal::ratio(mpz_class(prime.chi), power, prec);
}

// V' = V - (chi/p^n)(V - s)
HighPrecReal exclusion_step(int n, const PrimeChar& prime, const HighPrecReal& v,
                            const HighPrecReal& s) {
  return v - char_term(n, prime, v.precision()) * (v - s);
}

exclusion::State exact_chain(int n, std::size_t steps, Precision prec) {
  auto state = exclusion::init(n, prec);
  for (std::size_t i = 0; i < steps; ++i) state = exclusion::step(std::move(state));
  return state;
}

// Converged values shared by the tables that need them.
struct Exact {
  logmethod::Assembly assembly;

  [[nodiscard]] const HighPrecReal& w(int n) const {
    return n == 1 ? assembly.o.value : assembly.trace.at(static_cast<std::size_t>(n / 2 - 1)).w.value;
  }
  [[nodiscard]] const HighPrecReal& running(int n) const {
    return assembly.trace.at(static_cast<std::size_t>(n / 2 - 1)).running;
  }
};

Exact compute_exact(const Settings& settings) {
  logmethod::AssemblyOptions opts;
  opts.prec = settings.prec;
  opts.prime_depth = settings.primes;
  opts.threads = settings.threads;
  return Exact{logmethod::assemble_O_uncertified(std::max(settings.max_k, 6), opts)};
}

report::ReportTable make_table(TableId id, std::string title, std::vector<Row> rows,
                               const Settings& settings) {
  report::ReportTable t;
  t.table_id = std::string(to_string(id));
  t.title = std::move(title);
  t.rows = std::move(rows);
  t.config.digits = settings.digits;
  t.config.working_digits = settings.prec.digits;
  t.config.primes = settings.primes;
  t.config.max_k = settings.max_k;
  t.config.decimal_style = settings.decimal_style;
  t.version = report::library_version();
  return t;
}

// ---- tables ---------------------------------------------------------------

report::ReportTable build_s12(const Settings& settings) {
  const auto prec = settings.prec;
  Replay r("s12", prec);
  const auto pi4 = constant(ConstantName::pi, prec) / HighPrecReal::from_int(4, prec);
  r.add("A", std::string(kS12PiOver4), pi4, pi4);

  const auto chain = exact_chain(1, kS12Partials.size(), prec);
  const auto primes = first_odd_primes(kS12Partials.size());
  HighPrecReal previous = HighPrecReal::from_int(1, prec);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto label = exclusion::letter(i + 1, true);
    r.add(label, kS12Partials[i], previous + char_term(1, primes[i], prec),
          chain.trace[i].partial);
    previous = r.in(label);
  }
  return make_table(TableId::s12, "partial sums of the prime character series at n = 1",
                    r.take_rows(), settings);
}

report::ReportTable build_s13(const Settings& settings) {
  const auto prec = settings.prec;
  Replay r("s13", prec);
  const auto chain = exact_chain(1, kS13Values.size(), prec);
  const auto primes = first_odd_primes(kS13Values.size());

  HighPrecReal v = printed_value(kS12PiOver4, prec);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto s = i == 0 ? HighPrecReal::from_int(1, prec) : printed_value(kS12Partials[i - 1], prec);
    const auto label = exclusion::letter(i + 1);
    r.add(label, kS13Values[i], exclusion_step(1, primes[i], v, s), chain.trace[i].value);
    v = r.in(label);
  }
  return make_table(TableId::s13, "composite exclusion at n = 1", r.take_rows(), settings);
}

report::ReportTable build_s21(const Settings& settings) {
  const auto prec = settings.prec;
  Replay r("s21", prec);
  std::vector<BetaValue> betas;
  for (int n = 3; n <= 15; n += 2) betas.push_back(beta_closed(n, prec));
  for (std::size_t i = 0; i < kS21Beta.size(); ++i) {
    const auto& b = betas[i];
    r.add("beta(" + std::to_string(b.n) + ")", kS21Beta[i], b.value, b.value);
  }
  const auto diffs = beta_differences(betas);
  for (std::size_t i = 0; i < kS21Diff.size(); ++i) {
    const auto label = "beta(" + std::to_string(betas[i + 1].n) + ")-beta(" +
                       std::to_string(betas[i].n) + ")";
    r.add(label, kS21Diff[i], diffs[i], diffs[i]);
  }
  return make_table(TableId::s21, "Dirichlet beta at odd arguments and successive differences",
                    r.take_rows(), settings);
}

Replay replay_s23_26(const Settings& settings, const Exact& exact) {
  const auto prec = settings.prec;
  Replay r("s23_26", prec);
  const auto one = HighPrecReal::from_int(1, prec);

  std::string running_label = "l2/2";
  HighPrecReal running = constant(ConstantName::ln2, prec) / HighPrecReal::from_int(2, prec);
  for (const auto& block : kS23Blocks) {
    const int n = block.n;
    const auto prefix = "n=" + std::to_string(n) + " ";
    const auto steps = std::max(block.lower.size(), block.upper.size());
    const auto chain = exact_chain(n, steps, prec);
    const auto primes = first_odd_primes(steps);

    const auto beta = beta_closed(n, prec).value;
    r.add(prefix + "A", block.a, beta, beta);

    HighPrecReal s = one;
    for (std::size_t i = 0; i < block.lower.size(); ++i) {
      const auto label = prefix + exclusion::letter(i + 1, true);
      r.add(label, block.lower[i], s + char_term(n, primes[i], prec), chain.trace[i].partial);
      s = r.in(label);
    }

    HighPrecReal v = r.in(prefix + "A");
    for (std::size_t i = 0; i < block.upper.size(); ++i) {
      const auto s_before = i == 0 ? one : r.in(prefix + exclusion::letter(i, true));
      const auto label = prefix + exclusion::letter(i + 1);
      r.add(label, block.upper[i], exclusion_step(n, primes[i], v, s_before),
            chain.trace[i].value);
      v = r.in(label);
    }

    r.add(block.result_letter, block.result, one - v, exact.w(n));
    const auto divisor = HighPrecReal::from_int(n, prec);
    running_label += " - " + block.result_letter + "/" + std::to_string(n);
    r.add(running_label, block.running, running - r.in(block.result_letter) / divisor,
          exact.running(n));
    running = r.in(running_label);
  }

  // Columns n >= 9 are 1 - beta(n), quoted from the beta table as printed.
  HighPrecReal o = running;
  for (std::size_t i = 0; i < kS23Complements.size(); ++i) {
    const auto& c = kS23Complements[i];
    const auto divisor = HighPrecReal::from_int(c.n, prec);
    r.add(c.letter, c.value, one - printed_value(kS21Beta[i + 3], prec), exact.w(c.n));
    const auto quotient_label = c.letter + "/" + std::to_string(c.n);
    r.add(quotient_label, c.quotient, r.in(c.letter) / divisor, exact.w(c.n) / divisor);
    o -= r.in(quotient_label);
  }
  r.add("O", std::string(kS23O), o, exact.w(1));
  return r;
}

report::ReportTable build_s23_26(const Settings& settings, const Exact& exact) {
  auto r = replay_s23_26(settings, exact);
  return make_table(TableId::s23_26, "exclusion for n = 3, 5, 7 and the assembly of W(1)",
                    r.take_rows(), settings);
}

report::ReportTable build_s28(const Settings& settings, const Exact& exact) {
  const auto source = replay_s23_26(settings, exact);
  Replay r("s28", settings.prec);
  const std::map<int, std::string> letter{{1, "O"}, {3, "P"}, {5, "Q"}, {7, "R"},
                                          {9, "S"}, {11, "T"}, {13, "U"}};
  for (const auto& [n, printed] : kS28) {
    r.add("W(" + std::to_string(n) + ")", printed, source.value(letter.at(n)), exact.w(n));
  }
  return make_table(TableId::s28, "W(n) for odd n up to 13", r.take_rows(), settings);
}

report::ReportTable build_with(TableId id, const Settings& settings,
                               std::optional<Exact>& exact) {
  auto needs_exact = [&]() -> const Exact& {
    if (!exact) exact.emplace(compute_exact(settings));
    return *exact;
  };
  switch (id) {
    case TableId::s12:
      return build_s12(settings);
    case TableId::s13:
      return build_s13(settings);
    case TableId::s21:
      return build_s21(settings);
    case TableId::s23_26:
      return build_s23_26(settings, needs_exact());
    case TableId::s28:
      return build_s28(settings, needs_exact());
  }
  throw DomainError("unknown table");
}

}  // namespace

TableId parse_table_id(std::string_view text) {
  for (auto id : all_tables()) {
    if (to_string(id) == text) return id;
  }
  throw std::invalid_argument("unknown table '" + std::string(text) +
                              "' (expected s12, s13, s21, s23_26 or s28)");
}

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::s12:
      return "s12";
    case TableId::s13:
      return "s13";
    case TableId::s21:
      return "s21";
    case TableId::s23_26:
      return "s23_26";
    case TableId::s28:
      return "s28";
  }
  return "?";
}

const std::vector<TableId>& all_tables() {
  static const std::vector<TableId> ids{TableId::s12, TableId::s13, TableId::s21,
                                        TableId::s23_26, TableId::s28};
  return ids;
}

report::ReportTable build(TableId id, const Settings& settings) {
  std::optional<Exact> exact;
  return build_with(id, settings, exact);
}

std::vector<report::ReportTable> build_all(const Settings& settings) {
  std::optional<Exact> exact;
  std::vector<report::ReportTable> out;
  for (auto id : all_tables()) out.push_back(build_with(id, settings, exact));
  return out;
}

report::ReportTable w_table(int n_max, const Settings& settings) {
  if (n_max < 1 || n_max > 13 || n_max % 2 == 0) {
    throw DomainError("w_table: n_max must be odd and in [1, 13], got " + std::to_string(n_max));
  }
  auto table = build(TableId::s28, settings);
  std::erase_if(table.rows, [&](const Row& row) {
    return std::stoi(row.label.substr(2)) > n_max;
  });
  return table;
}

}  // namespace charprime::tables
