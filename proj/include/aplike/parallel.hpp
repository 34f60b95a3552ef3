#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace aplike {

  //! Runs body(i) for i in [0, count) on up to `threads` workers. Callers
  //! write results into per-index slots, so the outcome does not depend on
  //! scheduling. The first exception thrown by any worker is rethrown.
  template <typename Body>
  void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads <= 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mutex;
    {
      std::vector<std::jthread> workers;
      auto const n = std::min<std::size_t>(threads, count);
      for (std::size_t t = 0; t < n; ++t) {
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            try {
              body(i);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) {
                failure = std::current_exception();
              }
              next = count;
            }
          }
        });
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

}  // namespace aplike
