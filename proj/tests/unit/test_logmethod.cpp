#include <array>
#include <numeric>

#include "charprime/beta.hpp"
#include "charprime/logmethod.hpp"
#include "support.hpp"

namespace charprime {
namespace {

using charprime::testing::near;
using logmethod::EulerProduct;

const Precision kPrec{50};

TEST(Products, FactorsAreExactRationals) {
  const auto three = make_prime_char(3);
  const auto five = make_prime_char(5);
  EXPECT_EQ(logmethod::factor(EulerProduct::pi_over_4, three), mpq_class(3, 4));
  EXPECT_EQ(logmethod::factor(EulerProduct::pi_over_4, five), mpq_class(5, 4));
  EXPECT_EQ(logmethod::factor(EulerProduct::two, three), mpq_class(2, 1));
  EXPECT_EQ(logmethod::factor(EulerProduct::two, five), mpq_class(2, 3));
  EXPECT_EQ(logmethod::factor(EulerProduct::pi_squared_over_8, three), mpq_class(9, 8));
}

TEST(Products, FirstTwoFactors) {
  EXPECT_EQ(logmethod::exact_partials(EulerProduct::pi_over_4, 2).back(), mpq_class(15, 16));
  EXPECT_EQ(logmethod::exact_partials(EulerProduct::two, 2).back(), mpq_class(4, 3));
  EXPECT_EQ(logmethod::exact_partials(EulerProduct::pi_squared_over_8, 2).back(), mpq_class(75, 64));
}

TEST(Products, PartialsAfterTenThousandPrimes) {
  const auto pi4 = logmethod::product_pi4(10000, kPrec);
  EXPECT_FALSE(pi4.final.rigorous);
  EXPECT_NEAR(pi4.final.value.to_double(), 0.785611572794, 1e-11);
  const auto two = logmethod::product_two(10000, kPrec);
  EXPECT_FALSE(two.final.rigorous);
  EXPECT_NEAR(two.final.value.to_double(), 1.99891203212, 1e-10);
}

TEST(Products, PiSquaredOverEightIsRigorous) {
  const auto p = logmethod::product_pi2_8(2000, kPrec);
  EXPECT_TRUE(p.final.rigorous);
  const auto pi = constant(ConstantName::pi, kPrec);
  EXPECT_TRUE(consistent(p.final.value, pi * pi / HighPrecReal::from_int(8, kPrec)));
}

struct WGolden {
  int n;
  const char* value;
};

constexpr std::array<WGolden, 7> kW{{{3, "0.03225247383350252743465978"},
                                     {5, "0.003858069415480662095794426"},
                                     {7, "0.0004456959589340019986220856"},
                                     {9, "0.00005031836933794511539693316"},
                                     {11, "0.000005625057930147507903765777"},
                                     {13, "0.0000006264166210637657860576392"},
                                     {15, "0.00000006965916223028035398707716"}}};

TEST(WValue, MatchesOracle) {
  for (const auto& g : kW) {
    const auto w = logmethod::w_value(g.n, 15);
    EXPECT_TRUE(w.rigorous);
    EXPECT_LT(w.value.error_bound(), 1e-15) << g.n;
    EXPECT_TRUE(near(w.value, g.value, 1e-20)) << g.n;
  }
}

TEST(WValue, MethodFollowsTheComplementBound) {
  EXPECT_EQ(logmethod::w_value(13, 8).method, Method::beta_complement);
  EXPECT_EQ(logmethod::w_value(9, 8).method, Method::beta_complement);
  EXPECT_EQ(logmethod::w_value(9, 9).method, Method::exclusion);
  EXPECT_EQ(logmethod::w_value(3, 8).method, Method::exclusion);
}

TEST(WValue, ReportsAchievableDigits) {
  try {
    (void)logmethod::w_value(3, 40, logmethod::WOptions{kPrec, 100});
    FAIL() << "expected PrecisionError";
  } catch (const PrecisionError& e) {
    EXPECT_NE(std::string(e.what()).find("certified to about"), std::string::npos);
  }
  EXPECT_THROW((void)logmethod::w_value(1, 7), DomainError);
  EXPECT_THROW((void)logmethod::w_value(4, 7), DomainError);
}

TEST(Assembly, RunningValuesMatchOracle) {
  const auto a = logmethod::assemble_O_uncertified(10);
  const std::array<const char*, 6> running{
      "0.3358227656688051455637295", "0.3350511517857090131445706", "0.3349874809344327271447674",
      "0.3349818900045062887986122", "0.3349813786356035481160755", "0.334981330449709620134092"};
  for (std::size_t i = 0; i < running.size(); ++i) {
    EXPECT_TRUE(near(a.trace[i].running, running[i], 1e-18)) << i;
  }
}

TEST(Assembly, ConvergedValue) {
  const auto a = logmethod::assemble_O(10, 9);
  EXPECT_TRUE(a.o.rigorous);
  EXPECT_EQ(a.o.method, Method::log_assembly);
  EXPECT_TRUE(near(a.o.value, "0.3349813252999931810633171", 0));
  EXPECT_EQ(format_decimal(a.o.value, 7), "0.3349813");
  EXPECT_GT(a.o.value - HighPrecReal::ratio(1, 3, kPrec), HighPrecReal::ratio(16, 10000, kPrec));
}

TEST(Assembly, StableWhenDepthsDouble) {
  logmethod::AssemblyOptions deep;
  deep.prime_depth = 20000;
  const auto base = logmethod::assemble_O_uncertified(10);
  const auto doubled = logmethod::assemble_O_uncertified(20, deep);
  EXPECT_LT((base.o.value - doubled.o.value).abs().to_double(), 1e-9);
}

TEST(Assembly, ThreadCountDoesNotChangeResult) {
  logmethod::AssemblyOptions one;
  logmethod::AssemblyOptions four;
  four.threads = 4;
  const auto a = logmethod::assemble_O_uncertified(10, one);
  const auto b = logmethod::assemble_O_uncertified(10, four);
  EXPECT_EQ(a.o.value, b.o.value);
  EXPECT_EQ(a.o.value.error_bound(), b.o.value.error_bound());
}

TEST(Assembly, UncertifiableRequestThrows) {
  EXPECT_THROW((void)logmethod::assemble_O(1, 7), PrecisionError);
  EXPECT_THROW((void)logmethod::assemble_O_uncertified(0), DomainError);
}

TEST(Assembly, MasterIdentityWithinTail) {
  const auto deep = logmethod::assemble_O_uncertified(12);
  for (int k : {2, 4, 6}) {
    const auto r = logmethod::master_identity_residual(k, deep);
    EXPECT_LE(r.abs().to_double(), logmethod::analytic_tail_bound(k, kPrec).to_double() + r.error_bound()) << k;
  }
}

TEST(Assembly, AnalyticTailDominatesTrueTail) {
  // The true tail after max_k = 6 is 5.1497e-9 (difference of the oracle running values).
  EXPECT_GT(logmethod::analytic_tail_bound(6, kPrec).to_double(), 5.1497e-9);
  EXPECT_LT(logmethod::analytic_tail_bound(6, kPrec).to_double(), 1e-7);
}

TEST(Scan, FindsTwoForLogPiOverTwo) {
  const auto v = HighPrecReal::parse("0.45158270528945486472619522989488214357179467855506", kPrec);
  const auto c = logmethod::closed_form_scan(v, 10, 1e-9);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].numerator, 2u);
  EXPECT_EQ(c[0].denominator, 1u);
}

TEST(Scan, NothingNearTheAssembledValue) {
  const auto o = logmethod::assemble_O_uncertified(10).o.value;
  EXPECT_TRUE(logmethod::closed_form_scan(o, 1000, 1e-7).empty());
}

TEST(Scan, LooseToleranceSortedByResidual) {
  const auto o = logmethod::assemble_O_uncertified(10).o.value;
  const auto c = logmethod::closed_form_scan(o, 20, 1e-1);
  ASSERT_GT(c.size(), 5u);
  for (std::size_t i = 1; i < c.size(); ++i) {
    EXPECT_LE(c[i - 1].residual.abs(), c[i].residual.abs());
    EXPECT_EQ(std::gcd(c[i].numerator, c[i].denominator), 1u);
  }
}

TEST(Scan, EdgeCases) {
  const auto o = logmethod::assemble_O_uncertified(10).o.value;
  EXPECT_TRUE(logmethod::closed_form_scan(o, 1000, 0.0).empty());
  const auto rough = HighPrecReal::parse("0.33", kPrec).widened(HighPrecReal::parse("0.001", kPrec));
  EXPECT_THROW((void)logmethod::closed_form_scan(rough, 10, 1e-3), PrecisionError);
}

}  // namespace
}  // namespace charprime
