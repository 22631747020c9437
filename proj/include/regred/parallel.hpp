#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace regred {

/// Evaluates `work(i)` for every chunk i in [0, chunks) on up to `jobs` threads
/// and returns the results indexed by chunk, so merging in index order gives
/// the same answer for every thread count.
template <class Result, class Work>
std::vector<Result> run_chunks(std::size_t chunks, unsigned jobs, Work work) {
  std::vector<Result> results(chunks);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, chunks));
  if (workers == 1) {
    for (std::size_t i = 0; i < chunks; ++i) results[i] = work(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < chunks; i += workers) results[i] = work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace regred
