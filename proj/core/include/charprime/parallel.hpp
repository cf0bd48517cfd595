#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace charprime {

/// Evaluates fn(0..count-1) on up to `threads` workers. Results are returned
/// in index order regardless of scheduling; the lowest-index exception, if
/// any, is rethrown after all workers join.
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  using T = decltype(fn(std::size_t{0}));
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace charprime
