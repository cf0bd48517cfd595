#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <string_view>

#include "charprime/arith.hpp"

namespace charprime::testing {

/// |x - golden| <= tol + x.err, with the golden parsed at x's precision.
inline ::testing::AssertionResult near(const HighPrecReal& x, std::string_view golden, double tol) {
  const auto g = HighPrecReal::parse(golden, x.precision());
  const double gap = (x - g).abs().to_double();
  if (gap <= tol + x.error_bound()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "value " << format_decimal(x, 25, DecimalStyle::period, true)
                                       << " differs from " << golden << " by " << gap;
}

}  // namespace charprime::testing
