#ifndef RPSETS_SWEEP_HPP
#define RPSETS_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace rpsets {

/// Applies `fn` to every cell on up to `threads` workers and returns the
/// results in input order, independent of completion order. The first
/// exception thrown by any worker is rethrown after all workers stop.
template <typename Cell, typename Fn>
auto parallel_map(const std::vector<Cell>& cells, Fn fn, unsigned threads = 0)
    -> std::vector<std::invoke_result_t<Fn&, const Cell&>> {
  using Result = std::invoke_result_t<Fn&, const Cell&>;
  std::vector<Result> results(cells.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));

  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = fn(cells[i]);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        Fn local = fn;
        for (std::size_t i = next++; i < cells.size() && !failed; i = next++) {
          try {
            results[i] = local(cells[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace rpsets

#endif  // RPSETS_SWEEP_HPP
