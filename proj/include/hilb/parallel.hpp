#ifndef HILB_PARALLEL_HPP
#define HILB_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hilb {

/// Runs fn(task_index) for every index in [0, task_count) on up to
/// `threads` workers. Results land in a slot per task, so the merged
/// output is ordered by task index no matter how work interleaves.
template <class Result, class Fn>
std::vector<Result> run_indexed_tasks(std::size_t task_count, int threads,
                                      Fn&& fn) {
  std::vector<Result> results(task_count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) break;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<std::size_t>(threads, task_count);
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace hilb

#endif
