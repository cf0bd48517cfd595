#pragma once

#include <string_view>

#include "charprime/arith.hpp"

namespace charprime {

enum class SeriesId { W, beta, product };
enum class Method { exclusion, beta_complement, log_assembly, direct };

/// A labelled result. `rigorous` means value.err is a certified bound; when
/// false, err is an empirical estimate (n = 1 exclusion, conditionally
/// convergent products).
struct SeriesValue {
  SeriesId series = SeriesId::W;
  int n = 1;
  HighPrecReal value;
  Method method = Method::direct;
  bool rigorous = true;
};

[[nodiscard]] constexpr std::string_view to_string(SeriesId id) {
  switch (id) {
    case SeriesId::W:
      return "W";
    case SeriesId::beta:
      return "beta";
    case SeriesId::product:
      return "product";
  }
  return "?";
}

[[nodiscard]] constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::exclusion:
      return "exclusion";
    case Method::beta_complement:
      return "beta-complement";
    case Method::log_assembly:
      return "log-assembly";
    case Method::direct:
      return "direct";
  }
  return "?";
}

}  // namespace charprime
