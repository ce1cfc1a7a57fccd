#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace csg::detail {

/// out[i] = fn(items[i]) using up to `jobs` threads. Results keep the input
/// order, so callers stay deterministic regardless of the thread count.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn&& fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  if (jobs <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size() && !failed; i = next++) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(jobs, items.size());
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace csg::detail
