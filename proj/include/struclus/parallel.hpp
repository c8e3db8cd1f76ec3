#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace struclus {

/// Runs index-parallel loops on a fixed number of worker threads. Work items
/// are claimed dynamically, so results must be written to per-index slots for
/// the outcome to be independent of scheduling.
class Executor {
public:
    /// 0 selects std::thread::hardware_concurrency().
    explicit Executor(unsigned threads = 1)
        : threads_(threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads) {}

    unsigned threads() const noexcept { return threads_; }

    template <class F>
    void for_each(std::size_t n, F&& f) const {
        const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads_, n));
        if (workers <= 1) {
            for (std::size_t i = 0; i < n; ++i) f(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&] {
            try {
                for (std::size_t i = next++; i < n; i = next++) f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        };
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers - 1);
            for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
            body();
        }
        if (error) std::rethrow_exception(error);
    }

private:
    unsigned threads_;
};

}  // namespace struclus
