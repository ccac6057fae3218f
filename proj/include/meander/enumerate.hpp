#pragma once

#include <cstdint>
#include <functional>

#include "meander/perm.hpp"

namespace meander {

inline constexpr int max_enumerable_order = 20;

// visitor gets the finished crossing sequence; return false to stop early
using visit_fn = std::function<bool(const int* seq, int n)>;

// Visits every meander of order n exactly once, in lexicographic sequence
// order regardless of thread count, and returns the visit count. Incremental
// backtracking: a partial sequence is abandoned at the first crossing pair.
// threads <= 0 picks the hardware concurrency.
std::uint64_t enumerate(int n, int threads, const visit_fn& visit);

std::uint64_t enumerate_count(int n, int threads);

// Parallel fan-out primitive: all meanders of order n are partitioned by
// their first two values. Workers may process tasks in any order; within a
// task visits are lexicographic. Used by enumerate and by censuses that do
// per-meander work on the worker threads themselves.
struct prefix_task {
    int v1 = 0;
    int v2 = 0;  // 0 when n < 2: v1 alone fixes nothing extra
};

std::vector<prefix_task> prefix_tasks(int n);

std::uint64_t enumerate_prefix(int n, const prefix_task& t, const visit_fn& visit);

// run fn(task) over all prefix tasks on a pool; fn must be thread-safe
void for_each_prefix_task(int n, int threads, const std::function<void(const prefix_task&)>& fn);

}  // namespace meander
