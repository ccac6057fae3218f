#pragma once

#include <cstdint>
#include <map>

#include "meander/perm.hpp"

namespace meander {

inline constexpr int max_census_order = 14;

// Aggregates over every meander of one order. Root colors come from the
// canonical decomposition and are filled only when with_roots is set (the
// decomposition pass dominates the cost).
struct census_result {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t irreducible = 0;
    std::uint64_t snake = 0;
    std::uint64_t composite = 0;
    std::uint64_t black_started = 0;
    std::uint64_t white_started = 0;
    std::map<int, std::uint64_t> cups_hist;      // cup count -> meanders
    std::map<int, std::uint64_t> irr_by_cups;    // cup count -> irreducible meanders
};

census_result run_census(int n, int threads, bool with_roots);

}  // namespace meander
