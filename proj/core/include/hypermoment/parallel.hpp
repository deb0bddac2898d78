#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hypermoment {

// Splits [0, n) into at most `jobs` contiguous chunks and runs
// fn(begin, end) on each, one thread per chunk. Results come back in chunk
// order so reductions over them are deterministic. The first exception
// thrown by any chunk is rethrown.
template <typename Fn>
auto parallel_chunks(std::size_t n, std::size_t jobs, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  std::vector<Result> results(jobs);
  if (jobs == 1) {
    results[0] = fn(0, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::size_t begin = n * j / jobs;
    const std::size_t end = n * (j + 1) / jobs;
    workers.emplace_back([&, j, begin, end] {
      try {
        results[j] = fn(begin, end);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hypermoment
