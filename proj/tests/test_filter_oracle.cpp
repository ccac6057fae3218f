#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "golden.hpp"
#include "meander/enumerate.hpp"
#include "meander/perm.hpp"

namespace {

// reference implementation: try every permutation of {1..n}
std::vector<meander::seq_t> filter_all(int n) {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<meander::seq_t> out;
    do {
        if (meander::validate_small(seq.data(), n)) out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

std::uint64_t filter_count_fixed_first(int n, int v1) {
    std::vector<int> seq(n);
    seq[0] = v1;
    int k = 1;
    for (int v = 1; v <= n; ++v)
        if (v != v1) seq[k++] = v;
    std::uint64_t cnt = 0;
    do {
        if (meander::validate_small(seq.data(), n)) ++cnt;
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
    return cnt;
}

}  // namespace

TEST_CASE("hand-checked sequences through the hot-loop validator") {
    const std::vector<int> fig{7, 8, 9, 6, 5, 2, 3, 4, 1};
    CHECK(meander::validate_small(fig.data(), 9));
    const std::vector<int> bad{2, 1, 3};
    CHECK(!meander::validate_small(bad.data(), 3));
    const std::vector<int> one{1};
    CHECK(meander::validate_small(one.data(), 1));
}

TEST_CASE("enumeration equals permutation filtering through order 10") {
    for (int n = 1; n <= 10; ++n) {
        const auto oracle = filter_all(n);
        CHECK(oracle.size() == golden::table[n].m);
        std::vector<meander::seq_t> got;
        meander::enumerate(n, 1, [&](const int* seq, int m) {
            got.emplace_back(seq, seq + m);
            return true;
        });
        CHECK(got == oracle);
    }
}

TEST_CASE("filter counts agree at orders 11 and 12") {
    for (int n : {11, 12}) {
        std::vector<std::uint64_t> per_first(n + 1, 0);
        std::vector<std::thread> pool;
        for (int v1 = 1; v1 <= n; ++v1)
            pool.emplace_back(
                [n, v1, &per_first] { per_first[v1] = filter_count_fixed_first(n, v1); });
        for (auto& t : pool) t.join();
        const std::uint64_t total =
            std::accumulate(per_first.begin(), per_first.end(), std::uint64_t{0});
        CHECK(total == golden::table[n].m);
        CHECK(total == meander::enumerate_count(n, 0));
    }
}
