#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "meander/counting.hpp"

namespace meander {

inline constexpr int max_iterated_order = 36;

// column order in meanders.csv after the leading n
enum class table_col { m = 0, black, white, irr, iter, snake };
inline constexpr int table_col_count = 6;

// Cache image of the two csv files.  Cells hold decimal strings; an empty
// string marks a cell not computed at this table's scale (M, M_black,
// M_white, M_irr stop at the enumeration bound, M_iter and M_snake run
// through max_iterated_order).
struct table_set {
    int rows = 0;                                            // meanders.csv row count
    std::vector<std::array<std::string, table_col_count>> cells;  // [n-1][col]
    std::vector<std::tuple<int, int, std::string>> irr_rows;      // n, c, count
};

// Computes the full set: recursion totals and splits through max_n, the
// irreducible-by-cups table by enumeration through max_n, iterated snake
// and snake columns through max_iterated_order.
table_set build_tables(int max_n, int threads);

void save_tables(const std::filesystem::path& dir, const table_set& t);

// Missing or structurally unreadable files yield nullopt (callers then
// rebuild); value-level corruption is left for golden comparison.
std::optional<table_set> load_tables(const std::filesystem::path& dir);

// Highest n whose M cell is filled; 0 when none are.
int full_rows(const table_set& t);

irr_table_t irr_from(const table_set& t);

// flag value if nonempty, else $MEANDER_CACHE_DIR, else ./tables
std::filesystem::path cache_dir(const std::string& flag_value);

}  // namespace meander
