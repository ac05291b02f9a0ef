#include "qwvd/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace qwvd {

namespace {

std::atomic<int> g_max_threads{0};  // 0 = unset, resolve lazily

int resolve_default() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(static_cast<int>(hw == 0 ? 1 : hw), 1, 8);
}

}  // namespace

int max_threads() {
    int v = g_max_threads.load();
    return v > 0 ? v : resolve_default();
}

void set_max_threads(int n) { g_max_threads.store(n < 1 ? 1 : n); }

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace qwvd
