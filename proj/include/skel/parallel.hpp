#ifndef SKEL_PARALLEL_HPP
#define SKEL_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace skel {

/// Applies fn(index) for index in [0, count) on up to `jobs` threads and
/// collects the results by index, so the output never depends on scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<Result> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min<std::size_t>(jobs, count);
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace skel

#endif
