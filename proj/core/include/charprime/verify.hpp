#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "charprime/arith.hpp"

// Invariant suites of every module, runnable at any working precision and
// depth. Each group reports pass/fail with a one-line detail.
namespace charprime::verify {

struct Settings {
  Precision prec{};
  std::size_t primes = 10000;
  int max_k = 10;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed1737;
};

struct GroupResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

[[nodiscard]] const std::vector<std::string>& group_names();
/// Throws std::invalid_argument for an unknown group name.
[[nodiscard]] GroupResult run_group(std::string_view name, const Settings& settings = {});
[[nodiscard]] std::vector<GroupResult> run_all(const Settings& settings = {});

}  // namespace charprime::verify
