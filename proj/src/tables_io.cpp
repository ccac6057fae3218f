#include "meander/tables_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace meander {

namespace {

constexpr const char* kMeandersHeader = "n,M,M_black,M_white,M_irr,M_iter,M_snake";
constexpr const char* kIrrHeader = "n,c,count";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

}  // namespace

table_set build_tables(int max_n, int threads) {
    table_set t;
    t.rows = std::max(max_n, max_iterated_order);
    t.cells.resize(t.rows);

    const irr_table_t irr = brute_irreducible_table(max_n, threads);
    const count_tables ct = run_recursion(max_n, /*literal=*/false, irr);
    const std::vector<bigint> iter = iterated_snakes(max_iterated_order);

    for (int n = 1; n <= max_n; ++n) {
        auto& row = t.cells[n - 1];
        row[static_cast<int>(table_col::m)] = ct.m[n].str();
        row[static_cast<int>(table_col::black)] = ct.black[n].str();
        row[static_cast<int>(table_col::white)] = ct.white[n].str();
        bigint irr_n = 0;
        if (auto it = irr.find(n); it != irr.end())
            for (const auto& [c, cnt] : it->second) irr_n += cnt;
        row[static_cast<int>(table_col::irr)] = irr_n.str();
    }
    for (int n = 1; n <= t.rows; ++n) {
        auto& row = t.cells[n - 1];
        row[static_cast<int>(table_col::iter)] = iter[n].str();
        row[static_cast<int>(table_col::snake)] = std::to_string(snake_count(n));
    }
    for (const auto& [n, by_c] : irr)
        for (const auto& [c, cnt] : by_c)
            if (cnt) t.irr_rows.emplace_back(n, c, std::to_string(cnt));
    return t;
}

void save_tables(const std::filesystem::path& dir, const table_set& t) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "meanders.csv", std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + (dir / "meanders.csv").string());
        out << kMeandersHeader << '\n';
        for (int n = 1; n <= t.rows; ++n) {
            out << n;
            for (const auto& cell : t.cells[n - 1]) out << ',' << cell;
            out << '\n';
        }
    }
    {
        std::ofstream out(dir / "irreducible_by_cups.csv", std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " +
                                     (dir / "irreducible_by_cups.csv").string());
        out << kIrrHeader << '\n';
        for (const auto& [n, c, cnt] : t.irr_rows) out << n << ',' << c << ',' << cnt << '\n';
    }
}

std::optional<table_set> load_tables(const std::filesystem::path& dir) {
    std::ifstream main_in(dir / "meanders.csv");
    std::ifstream irr_in(dir / "irreducible_by_cups.csv");
    if (!main_in || !irr_in) return std::nullopt;

    table_set t;
    std::string line;
    if (!std::getline(main_in, line) || split_csv(line)[0] != "n") return std::nullopt;
    while (std::getline(main_in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 1 + table_col_count) return std::nullopt;
        int n;
        try {
            n = std::stoi(fields[0]);
        } catch (...) {
            return std::nullopt;
        }
        if (n < 1 || n > 4096) return std::nullopt;
        if (n > t.rows) {
            t.rows = n;
            t.cells.resize(n);
        }
        for (int c = 0; c < table_col_count; ++c) t.cells[n - 1][c] = fields[c + 1];
    }
    if (!std::getline(irr_in, line) || split_csv(line)[0] != "n") return std::nullopt;
    while (std::getline(irr_in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) return std::nullopt;
        try {
            t.irr_rows.emplace_back(std::stoi(fields[0]), std::stoi(fields[1]), fields[2]);
        } catch (...) {
            return std::nullopt;
        }
    }
    return t;
}

int full_rows(const table_set& t) {
    int best = 0;
    for (int n = 1; n <= t.rows; ++n)
        if (!t.cells[n - 1][static_cast<int>(table_col::m)].empty()) best = n;
    return best;
}

irr_table_t irr_from(const table_set& t) {
    irr_table_t out;
    for (const auto& [n, c, cnt] : t.irr_rows) {
        try {
            out[n][c] = std::stoull(cnt);
        } catch (...) {
            out[n][c] = 0;  // unreadable cell, verify reports the mismatch
        }
    }
    return out;
}

std::filesystem::path cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MEANDER_CACHE_DIR"); env && *env) return env;
    return "tables";
}

}  // namespace meander
