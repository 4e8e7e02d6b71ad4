#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ternions {

/// Calls `visit(index, out)` for every index in [0, count), splitting the
/// range into contiguous chunks across `workers` threads. Chunk outputs are
/// concatenated in index order, so the result does not depend on the worker
/// count. The first exception thrown by any worker is rethrown.
template <class T, class Visit>
std::vector<T> parallel_collect(std::uint64_t count, unsigned workers, Visit visit) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2 * workers) {
    std::vector<T> out;
    for (std::uint64_t i = 0; i < count; ++i) visit(i, out);
    return out;
  }
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        try {
          for (std::uint64_t i = begin; i < end; ++i) visit(i, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

/// Sorts and removes duplicates.
template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace ternions
