#ifndef CIRCREG_PARALLEL_HPP
#define CIRCREG_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace circreg {

/// Run fn(i) for i in [0, count) on up to `threads` workers (0 = hardware).
/// Tasks must write only to their own output slots; the numerical result must
/// not depend on the schedule. The first exception thrown by a task is
/// rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  unsigned want = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (want == 0) want = 1;
  if (want > count) want = static_cast<unsigned>(count);

  if (want == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count, std::memory_order_relaxed); // drain remaining work
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(want);
  for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

} // namespace circreg

#endif
