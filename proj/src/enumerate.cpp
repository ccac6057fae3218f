#include "meander/enumerate.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

namespace meander {

namespace {

inline bool crosses(int a1, int a2, int b1, int b2) noexcept {
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

// backtracker state; arcs stay small (at most n/2+1 per side)
struct walker {
    int n;
    int seq[max_enumerable_order];
    int lower[max_enumerable_order / 2 + 2][2];
    int upper[max_enumerable_order / 2 + 2][2];
    int nl = 0, nu = 0;
    bool used[max_enumerable_order + 1] = {};
    const visit_fn* visit;
    std::uint64_t count = 0;
    bool stopped = false;

    explicit walker(int order, const visit_fn* v) : n(order), visit(v) {}

    // try to append value v at depth k (0-based); true if arcs stay noncrossing
    bool push(int k, int v) {
        if (k == 0) {
            upper[nu][0] = 0;
            upper[nu][1] = v;
            ++nu;
        } else {
            const int a = seq[k - 1];
            const bool low = (k % 2 == 1);
            if (low) {
                for (int i = 0; i < nl; ++i)
                    if (crosses(a, v, lower[i][0], lower[i][1])) return false;
                lower[nl][0] = a;
                lower[nl][1] = v;
                ++nl;
            } else {
                for (int i = 0; i < nu; ++i)
                    if (crosses(a, v, upper[i][0], upper[i][1])) return false;
                upper[nu][0] = a;
                upper[nu][1] = v;
                ++nu;
            }
        }
        seq[k] = v;
        used[v] = true;
        return true;
    }

    void pop(int k) {
        used[seq[k]] = false;
        if (k == 0 || k % 2 == 0)
            --nu;
        else
            --nl;
    }

    bool escape_ok() const {
        if (n < 1) return true;  // entry points guard this; keeps -Warray-bounds quiet
        const int a = seq[n - 1], b = n + 1;
        if (n % 2 == 1) {
            for (int i = 0; i < nl; ++i)
                if (crosses(a, b, lower[i][0], lower[i][1])) return false;
        } else {
            for (int i = 0; i < nu; ++i)
                if (crosses(a, b, upper[i][0], upper[i][1])) return false;
        }
        return true;
    }

    void rec(int k) {
        if (stopped) return;
        if (k == n) {
            if (escape_ok()) {
                ++count;
                if (visit && !(*visit)(seq, n)) stopped = true;
            }
            return;
        }
        for (int v = 1; v <= n && !stopped; ++v) {
            if (used[v]) continue;
            if (!push(k, v)) continue;
            rec(k + 1);
            pop(k);
        }
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::uint64_t enumerate_sequential(int n, const visit_fn& visit) {
    walker w(n, visit ? &visit : nullptr);
    w.rec(0);
    return w.count;
}

}  // namespace

std::vector<prefix_task> prefix_tasks(int n) {
    std::vector<prefix_task> out;
    if (n < 2) {
        out.push_back({1, 0});
        return out;
    }
    for (int v1 = 1; v1 <= n; ++v1)
        for (int v2 = 1; v2 <= n; ++v2)
            if (v2 != v1) out.push_back({v1, v2});
    return out;
}

std::uint64_t enumerate_prefix(int n, const prefix_task& t, const visit_fn& visit) {
    if (n < 1 || n > max_enumerable_order)
        throw range_error("order outside the supported 1..20 range");
    walker w(n, visit ? &visit : nullptr);
    if (n < 2) {
        w.rec(0);
        return w.count;
    }
    if (!w.push(0, t.v1)) return 0;
    if (!w.push(1, t.v2)) {
        w.pop(0);
        return 0;
    }
    w.rec(2);
    w.pop(1);
    w.pop(0);
    return w.count;
}

void for_each_prefix_task(int n, int threads, const std::function<void(const prefix_task&)>& fn) {
    const auto tasks = prefix_tasks(n);
    const int nthreads = std::min<int>(resolve_threads(threads), static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        for (const auto& t : tasks) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) return;
                fn(tasks[idx]);
            }
        });
    for (auto& th : pool) th.join();
}

std::uint64_t enumerate(int n, int threads, const visit_fn& visit) {
    if (n < 1 || n > max_enumerable_order)
        throw range_error("order outside the supported 1..20 range");
    const int nthreads = resolve_threads(threads);
    if (nthreads == 1 || n < 4) return enumerate_sequential(n, visit);

    // workers fill per-task buffers; the caller's thread drains them in task
    // order so the visit sequence is lexicographic no matter the schedule
    const auto tasks = prefix_tasks(n);
    const std::size_t ntasks = tasks.size();
    std::vector<std::vector<int>> buffers(ntasks);
    std::vector<char> done(ntasks, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= ntasks || stop.load()) {
                if (idx < ntasks) {
                    std::lock_guard<std::mutex> lk(mu);
                    done[idx] = 1;
                    cv.notify_all();
                }
                return;
            }
            std::vector<int> buf;
            enumerate_prefix(n, tasks[idx], [&](const int* s, int order) {
                buf.insert(buf.end(), s, s + order);
                return true;
            });
            {
                std::lock_guard<std::mutex> lk(mu);
                buffers[idx] = std::move(buf);
                done[idx] = 1;
                cv.notify_all();
            }
        }
    };

    std::vector<std::thread> pool;
    const int spawn = std::min<int>(nthreads, static_cast<int>(ntasks));
    pool.reserve(spawn);
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);

    std::uint64_t count = 0;
    bool visiting = true;
    for (std::size_t idx = 0; idx < ntasks; ++idx) {
        std::vector<int> buf;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return done[idx] != 0; });
            buf = std::move(buffers[idx]);
        }
        const std::size_t m = buf.size() / n;
        for (std::size_t j = 0; j < m; ++j) {
            ++count;
            if (visiting && visit && !visit(buf.data() + j * n, n)) {
                visiting = false;
                stop.store(true);
            }
            if (!visiting) break;
        }
        if (!visiting) break;
    }
    stop.store(true);
    for (auto& th : pool) th.join();
    return count;
}

std::uint64_t enumerate_count(int n, int threads) {
    if (n < 1 || n > max_enumerable_order)
        throw range_error("order outside the supported 1..20 range");
    if (resolve_threads(threads) == 1 || n < 4) return enumerate_sequential(n, nullptr);
    std::atomic<std::uint64_t> total{0};
    for_each_prefix_task(n, threads, [&](const prefix_task& t) {
        total.fetch_add(enumerate_prefix(n, t, nullptr));
    });
    return total.load();
}

}  // namespace meander
