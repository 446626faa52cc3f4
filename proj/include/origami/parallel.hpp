#pragma once

// Deterministic parallel map: results are produced into an index-aligned
// vector and reduced in order by the caller, so thread count never changes
// any result.

#include <future>
#include <thread>
#include <vector>

namespace origami {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : (int)n;
}

template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f, int threads = 0)
    -> std::vector<decltype(f(items[0]))> {
  using R = decltype(f(items[0]));
  if (threads <= 0) threads = default_thread_count();
  std::vector<R> out(items.size());
  if (items.empty()) return out;
  if (threads == 1 || items.size() == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::size_t chunk = (items.size() + threads - 1) / threads;
  std::vector<std::future<void>> futs;
  for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
    std::size_t end = std::min(begin + chunk, items.size());
    futs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = f(items[i]);
    }));
  }
  for (auto& fu : futs) fu.get();
  return out;
}

}  // namespace origami
