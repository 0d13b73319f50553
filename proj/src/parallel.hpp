#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "tempo_btw/graph.hpp"

namespace tempo_btw::detail {

/// Calls fn(worker, s) for every source s, splitting sources into contiguous
/// blocks, one per worker. Worker 0 runs on the calling thread.
template <class Fn>
void for_each_source(std::size_t n, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, n)));
  auto block = [&](unsigned w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    for (std::size_t s = begin; s < end; ++s) fn(w, static_cast<VertexId>(s));
  };
  if (workers == 1) {
    block(0);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        block(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    block(0);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Number of workers for_each_source will actually use.
inline unsigned worker_count(std::size_t n, unsigned threads) {
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, n)));
}

/// Sums per-worker accumulators into the first one, in worker order.
template <class Num>
std::vector<Num> reduce(std::vector<std::vector<Num>>& partial) {
  std::vector<Num> total = std::move(partial.front());
  for (std::size_t w = 1; w < partial.size(); ++w) {
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += partial[w][i];
  }
  return total;
}

}  // namespace tempo_btw::detail
