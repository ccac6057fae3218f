#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meander/perm.hpp"

namespace meander {

using bigint = boost::multiprecision::cpp_int;

inline constexpr int max_table_order = 14;

// multiset of insertion orders, ascending
using parts_t = std::vector<int>;

// crossings a factor of order i adds when inserted: i-1 (odd) or i-2 (even)
inline int part_budget(int i) { return i - 2 + (i % 2); }

// slots!/(prod mult! * (slots-|parts|)!), 0 when slots < |parts|
bigint multinomial(long long slots, const parts_t& parts);

// k-sets of pairwise disjoint consecutive pairs in {1..n}: C(n-k, k)
bigint consecutive_pair_sets(int n, int k);

// all multisets over `allowed` whose part budgets sum to budget
std::vector<parts_t> budget_partitions(int budget, const std::vector<int>& allowed);

// (black factors >= 4, white factors >= 3, odd whites at cup crossings >= 3)
// with total budget as given
struct insertion_triple {
    parts_t black;
    parts_t white;
    parts_t cup_white;
};

std::vector<insertion_triple> insertion_triples(int budget, int max_part);

// (n, c) -> number of irreducible meanders of order n with c cups
using irr_table_t = std::map<int, std::map<int, std::uint64_t>>;

irr_table_t brute_irreducible_table(int max_n, int threads);

// snake count by classification: 0 for orders 1-2, else 1 + (n mod 2)
std::uint64_t snake_count(int n);

// Meander counts by root shape. black = proper_black + degenerate_black,
// where proper roots are irreducible of order >= 4 and degenerate roots are
// the order-1/2 meanders acting as hosts of odd factors at their crossings.
// literal keeps the machinery but equates each root's insertion budget to
// its own order instead of the remaining crossings; the output then leaves
// the true counts at N = 4.
struct count_tables {
    int max_n = 0;
    bool literal = false;
    std::vector<bigint> m, black, white;                  // index 1..max_n
    std::vector<bigint> proper_black, degenerate_black;   // black split
    irr_table_t irr;
};

count_tables run_recursion(int max_n, bool literal, const irr_table_t& irr);

// meanders whose construction tree is all white; exact through n = 36+
std::vector<bigint> iterated_snakes(int max_n);

}  // namespace meander
