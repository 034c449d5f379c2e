#include "harness/executor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pompeiu::harness {

std::size_t effective_threads(std::size_t requested) {
  std::size_t n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv(kThreadsEnv)) {
    try {
      const long long c = std::stoll(cap);
      if (c >= 1) n = std::min(n, static_cast<std::size_t>(c));
    } catch (const std::exception&) {
      // Ignore a malformed cap.
    }
  }
  return std::max<std::size_t>(n, 1);
}

ParallelFor make_executor(std::size_t threads) {
  if (threads <= 1) return serial_for;
  return [threads](std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(threads, n);
    if (workers <= 1) {
      serial_for(n, body);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::size_t failed_index = n;
    std::exception_ptr failure;
    auto run = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mutex);
          if (i < failed_index) {
            failed_index = i;
            failure = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  };
}

}  // namespace pompeiu::harness
