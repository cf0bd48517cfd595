#include <random>

#include "charprime/arith.hpp"
#include "support.hpp"

namespace charprime {
namespace {

using charprime::testing::near;

TEST(Constants, PiQuarterToTwentyDigits) {
  const auto pi = constant(ConstantName::pi, 20);
  EXPECT_TRUE(near(pi / HighPrecReal::from_int(4, pi.precision()), "0.78539816339744830962", 1e-20));
}

TEST(Constants, HalfLn2ToTwentyDigits) {
  const auto ln2 = constant("ln2", 20);
  EXPECT_TRUE(near(ln2 / HighPrecReal::from_int(2, ln2.precision()), "0.34657359027997265471", 1e-20));
}

TEST(Constants, LnPiToTwentyDigits) {
  const auto lnpi = constant("lnpi", 20);
  EXPECT_EQ(format_decimal(lnpi, 19), "1.1447298858494001741");
}

TEST(Constants, ErrorBelowRequestedDigits) {
  for (int d : {1, 7, 50, 300}) {
    const auto x = constant(ConstantName::pi, d);
    EXPECT_TRUE(x.certified_to(d)) << d;
  }
}

TEST(Constants, RejectsBadRequests) {
  EXPECT_THROW((void)constant(ConstantName::pi, 0), DomainError);
  EXPECT_THROW((void)constant(ConstantName::pi, Precision::kMaxDigits + 1), PrecisionError);
  EXPECT_THROW((void)constant("e", 10), DomainError);
  EXPECT_EQ(parse_constant_name("lnpi"), ConstantName::lnpi);
  EXPECT_EQ(to_string(ConstantName::ln2), "ln2");
}

TEST(HalfLogRatio, ThreeGivesHalfLn2) {
  const Precision prec{50};
  const auto v = half_log_ratio(HighPrecReal::from_int(3, prec), 30);
  EXPECT_TRUE(near(v, "0.34657359027997265471", 1e-14));
  EXPECT_EQ(format_decimal(v, 10), "0.3465735903");
}

TEST(HalfLogRatio, FiveGivesHalfLnThreeHalves) {
  const Precision prec{50};
  const auto v = half_log_ratio(HighPrecReal::from_int(5, prec), 30);
  EXPECT_TRUE(near(v, "0.20273255405408219099", 1e-19));
}

TEST(HalfLogRatio, SingleTermBoundCoversTruncation) {
  const Precision prec{50};
  const auto v = half_log_ratio(HighPrecReal::from_int(10, prec), 1);
  EXPECT_TRUE(near(v, "0.1", 1e-30 + v.error_bound()));
  EXPECT_GE(v.error_bound(), 1.0 / 3000.0);
  const auto exact = log(HighPrecReal::ratio(11, 9, prec)) / HighPrecReal::from_int(2, prec);
  EXPECT_TRUE(consistent(v, exact));
}

TEST(HalfLogRatio, RejectsDomain) {
  const Precision prec{30};
  EXPECT_THROW((void)half_log_ratio(HighPrecReal::from_int(1, prec), 5), DomainError);
  EXPECT_THROW((void)half_log_ratio(HighPrecReal::ratio(1, 2, prec), 5), DomainError);
  EXPECT_THROW((void)half_log_ratio(HighPrecReal::from_int(3, prec), 0), DomainError);
}

TEST(HalfLogRatio, DifferencesWithinStatedTail) {
  const Precision prec{60};
  for (long a : {2L, 3L, 7L, 13L}) {
    const auto x = HighPrecReal::from_int(a, prec);
    for (int t = 1; t <= 25; t += 3) {
      const auto gap = (half_log_ratio(x, t) - half_log_ratio(x, t + 10)).abs();
      EXPECT_LE(gap, half_log_ratio_tail(x, t)) << "a=" << a << " t=" << t;
    }
  }
}

TEST(FormatDecimal, EulerCommaStyle) {
  const auto o = HighPrecReal::parse("0.33498164", Precision{50});
  EXPECT_EQ(format_decimal(o, 7, DecimalStyle::euler_comma), "0,3349816");
}

TEST(FormatDecimal, ExactValuePadsZeros) {
  EXPECT_EQ(format_decimal(HighPrecReal::from_int(1, Precision{50}), 3), "1.000");
  EXPECT_EQ(format_decimal(HighPrecReal::from_int(0, Precision{50}), 2), "0.00");
  EXPECT_EQ(format_decimal(HighPrecReal::ratio(-1, 8, Precision{50}), 2), "-0.13");
  EXPECT_EQ(format_decimal(HighPrecReal::from_int(12, Precision{50}), 0), "12");
}

TEST(FormatDecimal, RoundsHalfAwayFromZero) {
  const Precision prec{50};
  EXPECT_EQ(format_decimal(HighPrecReal::ratio(1, 8, prec), 2), "0.13");
  EXPECT_EQ(format_decimal(HighPrecReal::ratio(-3, 8, prec), 2), "-0.38");
  EXPECT_EQ(format_decimal(HighPrecReal::parse("0.70442470762394486359", prec), 6), "0.704425");
}

TEST(FormatDecimal, RefusesUncertifiedDigits) {
  const auto x = HighPrecReal::from_int(1, Precision{50}).widened(HighPrecReal::parse("1e-5", Precision{50}));
  EXPECT_NO_THROW((void)format_decimal(x, 4));
  EXPECT_THROW((void)format_decimal(x, 7), PrecisionError);
  EXPECT_EQ(format_decimal(x, 7, DecimalStyle::period, true), "1.0000000");
  EXPECT_THROW((void)format_decimal(x, -1), DomainError);
}

TEST(DecimalStyle, ParseAndApply) {
  EXPECT_EQ(parse_decimal_style("period"), DecimalStyle::period);
  EXPECT_EQ(parse_decimal_style("euler-comma"), DecimalStyle::euler_comma);
  EXPECT_THROW((void)parse_decimal_style("comma"), std::invalid_argument);
  EXPECT_EQ(apply_decimal_style("-0.5", DecimalStyle::euler_comma), "-0,5");
  EXPECT_EQ(decimal_places("0.0000003"), 7);
  EXPECT_EQ(decimal_places("12"), 0);
}

TEST(Parse, AcceptsPeriodDecimalsOnly) {
  const Precision prec{30};
  EXPECT_TRUE(near(HighPrecReal::parse("-0.3349816", prec), "-0.3349816", 0));
  EXPECT_TRUE(near(HighPrecReal::parse("1e-7", prec), "0.0000001", 1e-40));
  EXPECT_THROW((void)HighPrecReal::parse("0,5", prec), std::invalid_argument);
  EXPECT_THROW((void)HighPrecReal::parse("abc", prec), std::invalid_argument);
  EXPECT_THROW((void)HighPrecReal::parse("", prec), std::invalid_argument);
}

TEST(Arithmetic, ExactOperationsCarryNoError) {
  const Precision prec{30};
  const auto a = HighPrecReal::from_int(3, prec);
  const auto b = HighPrecReal::from_int(5, prec);
  EXPECT_TRUE((a + b).is_exact());
  EXPECT_TRUE((a * b).is_exact());
  EXPECT_FALSE((a / b * a).is_exact());
}

TEST(Arithmetic, DivisionByIntervalContainingZero) {
  const Precision prec{30};
  const auto tiny = HighPrecReal::from_int(0, prec).widened(HighPrecReal::parse("1e-10", prec));
  EXPECT_THROW((void)(HighPrecReal::from_int(1, prec) / tiny), DomainError);
  EXPECT_THROW((void)(HighPrecReal::from_int(1, prec) / HighPrecReal::from_int(0, prec)), DomainError);
}

TEST(Arithmetic, MixedPrecisionUsesTheWider) {
  const auto a = HighPrecReal::ratio(1, 3, Precision{20});
  const auto b = HighPrecReal::ratio(1, 7, Precision{80});
  EXPECT_EQ((a + b).precision().digits, b.precision().digits);
}

TEST(Arithmetic, PowAndLog) {
  const Precision prec{40};
  const auto third = HighPrecReal::ratio(1, 3, prec);
  EXPECT_TRUE(near(third.pow(3), "0.037037037037037037037037037037", 1e-31));
  EXPECT_TRUE(near(log(HighPrecReal::from_int(2, prec)), "0.69314718055994530941723212145818", 1e-31));
  EXPECT_THROW((void)log(HighPrecReal::from_int(0, prec)), DomainError);
}

TEST(Arithmetic, CertifiedDecimalsTracksError) {
  const Precision prec{50};
  const auto x = HighPrecReal::from_int(1, prec).widened(HighPrecReal::parse("3e-9", prec));
  EXPECT_EQ(x.certified_decimals(), 8);
  EXPECT_EQ(HighPrecReal::from_int(1, prec).certified_decimals(), 50);
}

// Error-bound soundness: every result at precision D contains the same
// expression evaluated at 2D.
TEST(ArithmeticProperty, BoundsContainHigherPrecisionResult) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 499);
  std::uniform_int_distribution<int> op(0, 3);
  for (int digits : {15, 30, 50}) {
    for (int trial = 0; trial < 300; ++trial) {
      const long n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng), n3 = num(rng), d3 = den(rng);
      const int o1 = op(rng), o2 = op(rng);
      auto eval = [&](Precision p) {
        auto apply = [](int o, const HighPrecReal& a, const HighPrecReal& b) {
          switch (o) {
            case 0: return a + b;
            case 1: return a - b;
            case 2: return a * b;
            default: return a / b;
          }
        };
        return apply(o2, apply(o1, HighPrecReal::ratio(n1, d1, p), HighPrecReal::ratio(n2, d2, p)),
                     HighPrecReal::ratio(n3, d3, p));
      };
      try {
        const auto lo = eval(Precision{digits});
        const auto hi = eval(Precision{2 * digits});
        EXPECT_LE((lo - hi).abs().to_double(), lo.error_bound()) << digits << "/" << trial;
      } catch (const DomainError&) {
        // zero divisor drawn
      }
    }
  }
}

TEST(ArithmeticProperty, FormatParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 99991);
  const Precision prec{50};
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = HighPrecReal::ratio(num(rng), den(rng), prec);
    const int d = 1 + trial % 40;
    const auto back = HighPrecReal::parse(format_decimal(x, d), prec);
    EXPECT_LE((back - x).abs().to_double(), 0.5 * std::pow(10.0, -d) * (1 + 1e-12) + x.error_bound() + back.error_bound());
  }
}

}  // namespace
}  // namespace charprime
