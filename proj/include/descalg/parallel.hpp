#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace descalg {

/// Runs body(i) for i in [0, count) on up to `jobs` threads and returns the
/// results indexed by i, so the merge order never depends on scheduling.
/// The first exception thrown by any task is rethrown.
template <typename Result, typename Body>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Body body) {
  std::vector<std::optional<Result>> slots(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count && !failed.load();) {
      try {
        slots[i].emplace(body(i));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace descalg
