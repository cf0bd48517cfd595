#include <array>

#include "charprime/beta.hpp"
#include "charprime/exclusion.hpp"
#include "support.hpp"

namespace charprime {
namespace {

using charprime::testing::near;

const Precision kPrec{50};

TEST(Letters, SkipJ) {
  EXPECT_EQ(exclusion::letter(0), "A");
  EXPECT_EQ(exclusion::letter(1), "B");
  EXPECT_EQ(exclusion::letter(8), "I");
  EXPECT_EQ(exclusion::letter(9), "K");
  EXPECT_EQ(exclusion::letter(1, true), "b");
}

TEST(Exclusion, FirstStepAtOne) {
  auto s = exclusion::step(exclusion::init(1, kPrec));
  EXPECT_EQ(s.k, 1u);
  EXPECT_EQ(s.trace.back().prime.p, 3u);
  EXPECT_TRUE(near(s.value, "0.71386421786326441282", 1e-20));
  EXPECT_TRUE(near(s.partial, "0.66666666666666666667", 1e-20));
}

TEST(Exclusion, GoldenTraceAtOne) {
  const std::array<const char*, 9> golden{
      "0.71386421786326441282", "0.70442470762394486359", "0.68124728490355603458",
      "0.67737799045755896413", "0.67395663987624157461", "0.67606645575549264808",
      "0.67119379346708307538", "0.66924502534443859568", "0.66935854858836626104"};
  auto s = exclusion::init(1, kPrec);
  for (const char* g : golden) {
    s = exclusion::step(std::move(s));
    EXPECT_TRUE(near(s.value, g, 1e-19)) << s.k;
  }
  // The printed six-decimal letters, apart from I.
  const std::array<const char*, 9> printed{"0.713864", "0.704424", "0.681247", "0.677377", "0.673956",
                                           "0.676066", "0.671193", "0.669244", "0.669358"};
  for (std::size_t i = 0; i < printed.size(); ++i) {
    if (i == 7) continue;
    EXPECT_LE(std::abs((s.trace[i].value - HighPrecReal::parse(printed[i], kPrec)).to_double()), 2.5e-6) << i;
  }
}

TEST(Exclusion, GoldenTracesAtThreeFiveSeven) {
  auto three = exclusion::init(3, kPrec);
  for (const char* g : {"0.96779600352823491309", "0.96775733920371273749", "0.96774799336184903421",
                        "0.96774776832976333158"}) {
    three = exclusion::step(std::move(three));
    EXPECT_TRUE(near(three.value, g, 1e-19));
  }
  auto five = exclusion::init(5, kPrec);
  for (const char* g : {"0.99614201666999789143", "0.99614193435223550857"}) {
    five = exclusion::step(std::move(five));
    EXPECT_TRUE(near(five.value, g, 1e-19));
  }
  auto seven = exclusion::step(exclusion::init(7, kPrec));
  EXPECT_TRUE(near(seven.value, "0.99955430419044413442", 1e-19));
}

TEST(Exclusion, StepAndClosedFormAgree) {
  for (int n : {1, 3, 5, 7, 11}) {
    auto a = exclusion::init(n, kPrec);
    auto b = exclusion::init(n, kPrec);
    for (const auto& p : first_odd_primes(200)) {
      a = exclusion::step(std::move(a), p);
      b = exclusion::step_closed_form(std::move(b), p);
      ASSERT_LE((a.value - b.value).abs().to_double(), 10 * (a.value.error_bound() + b.value.error_bound()))
          << n << " " << p.p;
    }
  }
}

TEST(Exclusion, MultiplierSignRule) {
  for (const auto& p : first_odd_primes(500)) {
    EXPECT_EQ(exclusion::multiplier(1, p, kPrec).sign(), -p.chi) << p.p;
  }
  // 5 = 4n+1: the multiplier on V - s is -1/5, "numerator one less".
  EXPECT_TRUE(near(exclusion::multiplier(1, make_prime_char(5), kPrec), "-0.2", 1e-40));
}

TEST(Exclusion, MatchesSievedTailOracle) {
  for (int n : {3, 5, 7}) {
    auto s = exclusion::init(n, kPrec);
    for (std::size_t k = 1; k <= 6; ++k) {
      s = exclusion::step(std::move(s));
      const auto oracle = exclusion::sieved_tail_oracle(n, k, 30001, kPrec);
      EXPECT_TRUE(consistent(s.value - s.partial, oracle)) << n << " " << k;
    }
  }
}

TEST(SievedTail, Examples) {
  const auto all = exclusion::sieved_tail_oracle(3, 0, 200001, kPrec);
  EXPECT_TRUE(near(all, "-0.0310538", 1e-7));
  EXPECT_TRUE(consistent(all, beta_closed(3, kPrec).value - HighPrecReal::from_int(1, kPrec)));
  // After 3..11 the first survivor is 13, which enters with +.
  const auto first = exclusion::sieved_tail_oracle(3, 4, 13, kPrec);
  EXPECT_TRUE(near(first, "0.00045516613563950842057", 1e-20));
  EXPECT_GT(first.to_double(), 0.0);
  EXPECT_EQ(exclusion::sieved_tail_oracle(3, 1000, 50, kPrec).sign(), 0);
  EXPECT_THROW((void)exclusion::sieved_tail_oracle(1, 1, 100, kPrec), DomainError);
}

TEST(Run, RigorousForHigherExponents) {
  const auto r = exclusion::run(3, 2000, kPrec);
  EXPECT_TRUE(r.w.rigorous);
  EXPECT_EQ(r.w.method, Method::exclusion);
  EXPECT_TRUE(near(r.w.value, "0.03225247383350252743465978", 0));
  EXPECT_LT(r.w.value.error_bound(), 1e-13);
}

TEST(Run, OneIsFlaggedEmpirical) {
  const auto r = exclusion::run(1, 9, kPrec);
  EXPECT_FALSE(r.w.rigorous);
  EXPECT_TRUE(near(r.w.value, "0.33064145141163373896", 1e-19));
}

TEST(Run, FromPrintedStart) {
  const auto r = exclusion::run_from(3, HighPrecReal::parse("0.9689462", kPrec), 4);
  EXPECT_FALSE(r.w.rigorous);
  EXPECT_NEAR(r.w.value.to_double(), 0.0322521, 1.5e-7);
}

TEST(Run, CompositeTailBound) {
  // q = 5: 5^-6 + 5^-4 / 4
  EXPECT_TRUE(near(exclusion::composite_tail_bound(3, 5, kPrec), "0.000464", 1e-30));
}

TEST(Trace, CsvAndJsonExport) {
  auto s = exclusion::init(1, kPrec);
  s = exclusion::step(exclusion::step(std::move(s)));
  const auto csv = exclusion::trace_to_csv(s, 6);
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "prime,letter,index,V,s,err");
  EXPECT_NE(csv.find("3,B,1,0.713864,0.666667,"), std::string::npos);
  const auto comma = exclusion::trace_to_csv(s, 6, DecimalStyle::euler_comma);
  EXPECT_NE(comma.find("\"0,713864\""), std::string::npos);
  const auto json = exclusion::trace_to_json(s, 6);
  EXPECT_NE(json.find("\"letter\": \"C\""), std::string::npos);
}

}  // namespace
}  // namespace charprime
