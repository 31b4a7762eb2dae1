#include "focal/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace focal {

namespace {
std::atomic<int> g_threads{0};
thread_local bool t_inside_parallel = false;
}

int thread_count() { return g_threads.load(); }

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int effective_thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_jobs(int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 0) return;
    // Nested regions run serially; the outermost batch owns the workers.
    int workers = t_inside_parallel ? 1 : std::min(effective_thread_count(), jobs);
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&]() {
        t_inside_parallel = true;
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace focal
