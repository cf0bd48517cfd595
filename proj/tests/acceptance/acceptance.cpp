// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails. `--criterion N` runs only N.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../cli/run_cli.hpp"
#include "charprime/beta.hpp"
#include "charprime/logmethod.hpp"
#include "charprime/report.hpp"
#include "charprime/tables.hpp"
#include "charprime/verify.hpp"

namespace {

using namespace charprime;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const Precision kPrec{50};

long units(const HighPrecReal& value, const std::string& printed) {
  return report::units_between(format_decimal(value, decimal_places(printed)), printed,
                               decimal_places(printed));
}

Outcome beta_table() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::string> printed{"0.9689462", "0.9961578", "0.9995547",
                                         "0.9999499", "0.9999947", "0.9999997"};
  const std::vector<std::string> diffs{"0.0272116", "0.0033969", "0.0003952",
                                       "0.0000448", "0.0000050", "0.0000005"};
  std::vector<BetaValue> betas;
  for (int n = 3; n <= 15; n += 2) betas.push_back(beta_closed(n, kPrec));
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const long u = units(betas[i].value, printed[i]);
    o.require(std::labs(u) <= 1, "beta(" + std::to_string(betas[i].n) + ") = " +
                                     format_decimal(betas[i].value, 7) + " vs " + printed[i] +
                                     " (" + std::to_string(u) + " units)");
  }
  const auto d = beta_differences(betas);
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const long u = units(d[i], diffs[i]);
    o.require(std::labs(u) <= 1, "difference " + std::to_string(i + 1) + " = " +
                                     format_decimal(d[i], 7) + " vs " + diffs[i] + " (" +
                                     std::to_string(u) + " units)");
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome euler_numbers_exact() {
  Outcome o;
  const std::vector<const char*> golden{"1", "1", "5", "61", "1385", "50521",
                                        "2702765", "199360981", "19391512145"};
  const auto t = euler_numbers(9);
  o.require(t.values.size() == golden.size(), "wrong count");
  for (std::size_t i = 0; i < golden.size() && i < t.values.size(); ++i) {
    o.require(t.values[i] == mpz_class(golden[i]), "E_" + std::to_string(2 * i) + " = " + t.values[i].get_str());
  }
  return o;
}

Outcome exclusion_trace() {
  Outcome o;
  const auto start = Clock::now();
  const auto t = tables::build(tables::TableId::s13);
  for (const auto& row : t.rows) {
    if (row.label == "I") continue;
    o.require(row.verdict == report::Verdict::match &&
                  std::labs(report::units_between(row.recomputed, row.printed, 6)) <= 2,
              row.label + " recomputed " + row.recomputed + " vs " + row.printed);
  }
  const auto& i = t.row("I");
  o.require(i.verdict == report::Verdict::erratum, "I not flagged as erratum");
  o.require(std::labs(report::units_between(i.recomputed, "0.669244", 6)) <= 1,
            "I recomputed " + i.recomputed);
  // K is replayed from the corrected I and lands on the printed value.
  o.require(t.row("K").recomputed == "0.669358", "K from corrected I = " + t.row("K").recomputed);
  const double secs = seconds_since(start);
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome intermediate_assemblies() {
  Outcome o;
  const auto t = tables::build(tables::TableId::s23_26);
  const std::vector<std::pair<std::string, std::string>> running{
      {"l2/2 - P/3", "0.3358229"},
      {"l2/2 - P/3 - Q/5", "0.3350513"},
      {"l2/2 - P/3 - Q/5 - R/7", "0.3349877"}};
  for (const auto& [label, printed] : running) {
    const long u = report::units_between(t.row(label).recomputed, printed, 7);
    o.require(std::labs(u) <= 2, label + " = " + t.row(label).recomputed + " vs " + printed);
  }
  for (const auto& [label, printed] :
       std::vector<std::pair<std::string, std::string>>{{"P", "0.0322521"}, {"Q", "0.0038581"}, {"R", "0.0004455"}}) {
    const long u = report::units_between(t.row(label).recomputed, printed, 7);
    o.require(std::labs(u) <= 1, label + " = " + t.row(label).recomputed + " vs " + printed);
  }
  return o;
}

Outcome final_value() {
  Outcome o;
  const auto base = logmethod::assemble_O_uncertified(10);
  logmethod::AssemblyOptions deep_opts;
  deep_opts.prime_depth = 20000;
  const auto deep = logmethod::assemble_O_uncertified(20, deep_opts);
  const auto& value = base.o.value;

  const auto gap = (value - HighPrecReal::parse("0.3349816", kPrec)).abs();
  std::ostringstream msg;
  msg << "O = " << format_decimal(value, 10) << " differs from 0.3349816 by " << gap.to_double()
      << " (allowed 2e-7)";
  o.require(gap < HighPrecReal::parse("2e-7", kPrec), msg.str());

  const double drift = (value - deep.o.value).abs().to_double();
  o.require(drift < 1e-9, "doubling depths moves O by " + std::to_string(drift));
  const auto third = HighPrecReal::ratio(1, 3, kPrec);
  o.require(value - third > HighPrecReal::ratio(16, 10000, kPrec), "O - 1/3 <= 0.0016");
  o.require(HighPrecReal::from_int(1, kPrec) - value < HighPrecReal::ratio(669, 1000, kPrec), "1 - O >= 0.669");
  return o;
}

Outcome w_table() {
  Outcome o;
  const auto t = tables::build(tables::TableId::s28);
  for (const auto& row : t.rows) {
    if (row.label == "W(5)") {
      o.require(row.verdict == report::Verdict::erratum && row.printed == "0.0038602" &&
                    std::labs(report::units_between(row.recomputed, "0.0038581", 7)) <= 1,
                "W(5) not flagged with recomputed 0.0038581 (got " + row.recomputed + ")");
      continue;
    }
    const long u = report::units_between(row.recomputed, row.printed, 7);
    o.require(std::labs(u) <= 1 && row.verdict == report::Verdict::match,
              row.label + " = " + row.recomputed + " vs " + row.printed);
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (const char* group :
       {"primes.multiplicativity", "exclusion.step-equivalence", "exclusion.oracle-equivalence",
        "logmethod.master-identity", "logmethod.product-first-factors"}) {
    const auto r = verify::run_group(group);
    o.require(r.passed, r.name + ": " + r.detail);
  }
  // Alternating-series bound: the first omitted term bounds the error of
  // every truncation.
  for (int n = 3; n <= 17; n += 2) {
    const auto closed = beta_closed(n, kPrec).value;
    for (long terms : {1L, 3L, 10L, 100L}) {
      const auto d = beta_direct(n, terms, kPrec).value;
      o.require(!(d.error() < (d - closed).abs()),
                "beta_direct(" + std::to_string(n) + ", " + std::to_string(terms) + ") bound violated");
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto start = Clock::now();
  const auto a = testing::run_cli("reproduce all --format json");
  const auto b = testing::run_cli("reproduce all --format json");
  const double secs = seconds_since(start);
  o.require(a.exit_code == 0 && b.exit_code == 0, "nonzero exit");
  o.require(!a.out.empty() && a.out == b.out, "outputs differ");
  o.require(secs < 30.0, "two runs took " + std::to_string(secs) + " s");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"beta table and differences", beta_table},
      {"Euler numbers", euler_numbers_exact},
      {"exclusion trace at n = 1", exclusion_trace},
      {"intermediate assemblies", intermediate_assemblies},
      {"final value of W(1)", final_value},
      {"W(n) table", w_table},
      {"property suites", property_suites},
      {"determinism of reproduce all", determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const auto& list = criteria();
  if (only < 0 || only > static_cast<int>(list.size())) {
    std::cerr << "criterion must be in 1.." << list.size() << '\n';
    return 2;
  }

  bool all_passed = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Outcome outcome;
    try {
      outcome = list[i].second();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("threw: ") + e.what());
    }
    std::cout << (outcome.passed ? "PASS" : "FAIL") << " AC" << i + 1 << " " << list[i].first;
    if (!outcome.passed) {
      std::cout << ":";
      for (std::size_t k = 0; k < outcome.notes.size(); ++k) {
        std::cout << (k == 0 ? " " : "; ") << outcome.notes[k];
      }
    }
    std::cout << '\n';
    all_passed = all_passed && outcome.passed;
  }
  return all_passed ? 0 : 1;
}
