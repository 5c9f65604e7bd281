#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sugeq::detail {

// Splits [0, count) into contiguous chunks, runs fn(begin, end) for each on
// its own thread and returns the chunk results in chunk order, so the merged
// output does not depend on scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::size_t count, Fn&& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(hw, count / 64));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = fn(std::size_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace sugeq::detail
