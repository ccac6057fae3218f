// Command line front end over libmeander's C interface.

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meander.h"

namespace {

// Reference table of meander counts by order: total, all-white construction
// trees, irreducible. Read-only; the verify command compares computed cells
// against it and everything else only quotes it.
struct golden_row {
    const char* m;
    const char* iter;
    const char* irr;
};

constexpr int kGoldenRows = 36;

const golden_row kGolden[kGoldenRows] = {
    {"1", "1", "1"},
    {"1", "1", "1"},
    {"2", "2", "0"},
    {"3", "3", "0"},
    {"8", "8", "0"},
    {"14", "14", "0"},
    {"42", "42", "0"},
    {"81", "79", "2"},
    {"262", "252", "2"},
    {"538", "494", "0"},
    {"1828", "1636", "0"},
    {"3926", "3294", "26"},
    {"13820", "11188", "36"},
    {"30694", "22952", "52"},
    {"110954", "79386", "64"},
    {"252939", "165127", "516"},
    {"933458", "579020", "816"},
    {"2172830", "1217270", "2186"},
    {"8152860", "4314300", "3296"},
    {"19304190", "9146746", "15054"},
    {"73424650", "32697920", "24946"},
    {"176343390", "69799476", "84090"},
    {"678390116", "251284292", "138352"},
    {"1649008456", "539464358", "544652"},
    {"6405031050", "1953579240", "934450"},
    {"15730575554", "4214095612", "3377930"},
    {"61606881612", "15336931928", "5831520"},
    {"152663683494", "33218794236", "22075152"},
    {"602188541928", "121416356108", "38959552"},
    {"1503962954930", "263908187100", "143815358"},
    {"5969806669034", "968187827834", "256128664"},
    {"15012865733351", "2110912146295", "959463704"},
    {"59923200729046", "7769449728780", "1732188588"},
    {"151622652413194", "16985386737830", "6440145162"},
    {"608188709574124", "62696580696172", "11727449592"},
    {"1547365078534578", "137394914285538", "43825381338"},
};

std::string count_estimate(int n) {
    if (n >= 1 && n <= kGoldenRows) return std::string(kGolden[n - 1].m) + " meanders";
    // growth ratio of the totals is a little above 4; enough for a refusal note
    const double digits = std::log10(1.547365078534578e15) + 0.63 * (n - kGoldenRows);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "about 10^%.0f meanders", digits);
    return buf;
}

int refuse_order(const char* verb, int n, int bound) {
    std::cerr << "meander: refusing to " << verb << " order " << n << " (limit " << bound
              << "): " << count_estimate(n) << " at this order\n";
    return 2;
}

int usage_error(const std::string& msg) {
    std::cerr << "meander: " << msg << '\n';
    return 2;
}

int api_error(const std::string& what) {
    std::cerr << "meander: " << what << ": " << meander_last_error() << '\n';
    return 2;
}

std::string owned_string(char* s) {
    std::string out = s ? s : "";
    meander_string_destroy(s);
    return out;
}

using perm_ptr = std::unique_ptr<meander_perm, decltype(&meander_perm_destroy)>;
using tables_ptr = std::unique_ptr<meander_tables, decltype(&meander_tables_destroy)>;

perm_ptr make_perm(const std::vector<int>& values, meander_status* status) {
    meander_perm* raw = nullptr;
    *status = meander_perm_create(values.data(), static_cast<int>(values.size()), &raw);
    return perm_ptr(raw, &meander_perm_destroy);
}

bool parse_perm_csv(const std::string& text, std::vector<int>* out) {
    out->clear();
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(field, &pos);
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos])))
                ++pos;
            if (pos != field.size()) return false;
            out->push_back(v);
        } catch (...) {
            return false;
        }
    }
    return !out->empty();
}

std::string jsonl_of(const int* seq, int n) {
    std::string line = "{\"n\":" + std::to_string(n) + ",\"perm\":[";
    for (int i = 0; i < n; ++i) {
        if (i) line += ',';
        line += std::to_string(seq[i]);
    }
    line += "]}";
    return line;
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(int n, int threads, const std::string& out_file) {
    if (n < 1) return usage_error("order must be at least 1");
    if (n > MEANDER_MAX_ENUMERABLE)
        return refuse_order("enumerate", n, MEANDER_MAX_ENUMERABLE);

    std::ofstream file;
    std::ostream* dest = &std::cout;
    if (!out_file.empty()) {
        file.open(out_file, std::ios::trunc);
        if (!file) return usage_error("cannot write " + out_file);
        dest = &file;
    }
    struct ctx_t {
        std::ostream* dest;
    } ctx{dest};
    uint64_t count = 0;
    const meander_status s = meander_enumerate(
        n, threads,
        [](const int* seq, int order, void* vctx) {
            auto* c = static_cast<ctx_t*>(vctx);
            *c->dest << jsonl_of(seq, order) << '\n';
            return 1;
        },
        &ctx, &count);
    if (s != MEANDER_OK) return api_error("enumerate failed");
    dest->flush();
    if (dest == &file && !file) return usage_error("write failure on " + out_file);
    std::cout << "# count " << count << '\n';
    return 0;
}

// ---- classify -----------------------------------------------------------

int cmd_classify(int n, int threads) {
    if (n < 1) return usage_error("order must be at least 1");
    if (n > MEANDER_MAX_CENSUS) return refuse_order("classify", n, MEANDER_MAX_CENSUS);
    meander_census c;
    if (meander_census_run(n, threads, /*with_roots=*/1, &c) != MEANDER_OK)
        return api_error("census failed");
    std::cout << "order " << c.n << '\n';
    std::cout << "total " << c.total << '\n';
    std::cout << "irreducible " << c.irreducible << '\n';
    std::cout << "snake " << c.snake << '\n';
    std::cout << "composite " << c.composite << '\n';
    std::cout << "black_started " << c.black_started << '\n';
    std::cout << "white_started " << c.white_started << '\n';
    for (int cups = 0; cups <= MEANDER_MAX_ENUMERABLE / 2; ++cups)
        if (c.cups_hist[cups]) std::cout << "cups[" << cups << "] " << c.cups_hist[cups] << '\n';
    return 0;
}

// ---- decompose ----------------------------------------------------------

int decompose_one(const std::vector<int>& values) {
    meander_status s;
    perm_ptr p = make_perm(values, &s);
    if (s != MEANDER_OK) return api_error("invalid crossing sequence");
    char* json = nullptr;
    if (meander_decompose_json(p.get(), &json) != MEANDER_OK)
        return api_error("decomposition failed");
    std::cout << owned_string(json) << '\n';
    char* dot = nullptr;
    if (meander_graph_dot(p.get(), &dot) != MEANDER_OK) return api_error("graph failed");
    std::cout << owned_string(dot);
    return 0;
}

int cmd_decompose(const std::string& perm_csv, const std::string& in_file) {
    if (perm_csv.empty() == in_file.empty())
        return usage_error("decompose needs exactly one of --perm or --file");
    if (!perm_csv.empty()) {
        std::vector<int> values;
        if (!parse_perm_csv(perm_csv, &values))
            return usage_error("--perm wants comma separated integers");
        return decompose_one(values);
    }
    std::ifstream in(in_file);
    if (!in) return usage_error("cannot read " + in_file);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        // jsonl records as written by enumerate: {"n":K,"perm":[..]}
        const auto open = line.find('[');
        const auto close = line.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            return usage_error(in_file + ":" + std::to_string(lineno) + ": not a jsonl record");
        std::vector<int> values;
        if (!parse_perm_csv(line.substr(open + 1, close - open - 1), &values))
            return usage_error(in_file + ":" + std::to_string(lineno) + ": bad perm array");
        if (int rc = decompose_one(values); rc != 0) return rc;
    }
    return 0;
}

// ---- tables plumbing ----------------------------------------------------

std::string resolved_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("MEANDER_CACHE_DIR"); env && *env) return env;
    return "tables";
}

// loads the cache when it covers max_n, else computes and saves; reports
// what happened through the '#'-prefixed notes
tables_ptr obtain_tables(int max_n, int threads, const std::string& dir,
                         std::vector<std::string>* notes, bool* computed) {
    meander_tables* raw = nullptr;
    if (meander_tables_load(dir.c_str(), &raw) == MEANDER_OK) {
        tables_ptr t(raw, &meander_tables_destroy);
        if (meander_tables_full_rows(t.get()) >= max_n &&
            meander_tables_rows(t.get()) >= MEANDER_MAX_ITERATED) {
            notes->push_back("# tables loaded from " + dir);
            *computed = false;
            return t;
        }
        notes->push_back("# cached tables too shallow, recomputing");
    }
    const auto t0 = std::chrono::steady_clock::now();
    raw = nullptr;
    if (meander_tables_build(max_n, threads, &raw) != MEANDER_OK)
        return tables_ptr(nullptr, &meander_tables_destroy);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "# tables computed to order %d in %.2f s", max_n, secs);
    notes->push_back(buf);
    tables_ptr t(raw, &meander_tables_destroy);
    if (meander_tables_save(t.get(), dir.c_str()) != MEANDER_OK)
        notes->push_back(std::string("# cache not saved: ") + meander_last_error());
    else
        notes->push_back("# tables saved to " + dir);
    *computed = true;
    return t;
}

void print_table_csv(const meander_tables* t) {
    std::cout << "n,M,M_black,M_white,M_irr,M_iter,M_snake\n";
    const int rows = meander_tables_rows(t);
    for (int n = 1; n <= rows; ++n) {
        std::cout << n;
        for (int col = 0; col < 6; ++col) {
            const char* cell = meander_tables_cell(t, n, col);
            std::cout << ',' << (cell ? cell : "");
        }
        std::cout << '\n';
    }
}

// ---- count --------------------------------------------------------------

int cmd_count(int max_n, const std::string& mode, int threads, const std::string& cache_flag) {
    if (max_n < 1) return usage_error("--max must be at least 1");
    if (max_n > MEANDER_MAX_TABLE) return refuse_order("count to", max_n, MEANDER_MAX_TABLE);
    std::vector<std::string> notes;
    bool computed = false;
    tables_ptr base =
        obtain_tables(max_n, threads, resolved_cache_dir(cache_flag), &notes, &computed);
    if (!base) return api_error("table construction failed");
    for (const auto& note : notes) std::cout << note << '\n';

    if (mode == "corrected") {
        print_table_csv(base.get());
        return 0;
    }
    meander_tables* raw = nullptr;
    if (meander_tables_literal(base.get(), &raw) != MEANDER_OK)
        return api_error("literal recursion failed");
    tables_ptr lit(raw, &meander_tables_destroy);
    print_table_csv(lit.get());
    const int full = meander_tables_full_rows(base.get());
    int divergent = 0;
    for (int n = 1; n <= full && !divergent; ++n) {
        const std::string a = meander_tables_cell(base.get(), n, MEANDER_COL_M);
        const std::string b = meander_tables_cell(lit.get(), n, MEANDER_COL_M);
        if (a != b) {
            divergent = n;
            std::cout << "# literal budget first diverges at N=" << n << ": " << b << " vs "
                      << a << '\n';
        }
    }
    if (!divergent)
        std::cout << "# literal budget matches the corrected totals through N=" << full << '\n';
    return 0;
}

// ---- verify -------------------------------------------------------------

struct verify_stats {
    int cells = 0;
    int mismatches = 0;
};

void check_cell(const char* name, int n, const char* got, const char* expected,
                verify_stats* stats) {
    ++stats->cells;
    const std::string g = got ? got : "";
    if (g == expected) {
        std::cout << "PASS " << name << "[" << n << "] = " << expected << '\n';
    } else {
        ++stats->mismatches;
        std::cout << "FAIL " << name << "[" << n << "] expected " << expected << " got "
                  << (g.empty() ? "<empty>" : g.c_str()) << '\n';
    }
}

int cmd_verify(int max_n, int threads, const std::string& cache_flag) {
    if (max_n < 1) return usage_error("--max must be at least 1");
    if (max_n > MEANDER_MAX_TABLE) return refuse_order("verify to", max_n, MEANDER_MAX_TABLE);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> notes;
    bool computed = false;
    tables_ptr t = obtain_tables(max_n, threads, resolved_cache_dir(cache_flag), &notes, &computed);
    if (!t) return api_error("table construction failed");
    for (const auto& note : notes) std::cout << note << '\n';

    verify_stats stats;
    for (int n = 1; n <= max_n; ++n)
        check_cell("M", n, meander_tables_cell(t.get(), n, MEANDER_COL_M), kGolden[n - 1].m,
                   &stats);
    for (int n = 1; n <= max_n; ++n)
        check_cell("M_irr", n, meander_tables_cell(t.get(), n, MEANDER_COL_IRR),
                   kGolden[n - 1].irr, &stats);
    const int iter_rows = std::min(meander_tables_rows(t.get()), MEANDER_MAX_ITERATED);
    for (int n = 1; n <= iter_rows; ++n)
        check_cell("M_iter", n, meander_tables_cell(t.get(), n, MEANDER_COL_ITER),
                   kGolden[n - 1].iter, &stats);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "# verified in %.2f s", secs);
    std::cout << buf << '\n';
    std::cout << "checked " << stats.cells << " cells, " << stats.mismatches
              << " mismatches\n";
    return stats.mismatches ? 1 : 0;
}

// ---- render -------------------------------------------------------------

int write_svg(const meander_perm* p, const std::filesystem::path& path) {
    char* svg = nullptr;
    if (meander_svg(p, &svg) != MEANDER_OK) return api_error("svg failed");
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) return usage_error("cannot write " + path.string());
    out << owned_string(svg);
    return out ? 0 : usage_error("write failure on " + path.string());
}

int cmd_render(const std::string& perm_csv, const std::string& cls, int n, int threads,
               const std::string& out_dir) {
    if (out_dir.empty()) return usage_error("render needs -o <dir>");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) return usage_error("cannot create " + out_dir);

    if (!perm_csv.empty()) {
        std::vector<int> values;
        if (!parse_perm_csv(perm_csv, &values))
            return usage_error("--perm wants comma separated integers");
        meander_status s;
        perm_ptr p = make_perm(values, &s);
        if (s != MEANDER_OK) return api_error("invalid crossing sequence");
        std::string name = "meander";
        for (int v : values) name += "_" + std::to_string(v);
        const auto path = std::filesystem::path(out_dir) / (name + ".svg");
        if (int rc = write_svg(p.get(), path); rc != 0) return rc;
        std::cout << "wrote 1 file to " << out_dir << '\n';
        return 0;
    }

    if (n < 1) return usage_error("render needs --perm or -n with a class filter");
    if (n > MEANDER_MAX_CENSUS) return refuse_order("render", n, MEANDER_MAX_CENSUS);

    struct ctx_t {
        std::string cls;
        std::filesystem::path dir;
        int written = 0;
        int rc = 0;
    } ctx{cls, out_dir, 0, 0};

    const meander_status s = meander_enumerate(
        n, threads,
        [](const int* seq, int order, void* vctx) {
            auto* c = static_cast<ctx_t*>(vctx);
            meander_perm* raw = nullptr;
            if (meander_perm_create(seq, order, &raw) != MEANDER_OK) {
                c->rc = 2;
                return 0;
            }
            perm_ptr p(raw, &meander_perm_destroy);
            bool keep = true;
            if (c->cls != "all") {
                meander_kind kind;
                int inverse = 0;
                if (meander_classify(p.get(), &kind, &inverse) != MEANDER_OK) {
                    c->rc = 2;
                    return 0;
                }
                const char* want = c->cls.c_str();
                keep = (kind == MEANDER_IRREDUCIBLE && std::string("irreducible") == want) ||
                       (kind == MEANDER_SNAKE && std::string("snake") == want) ||
                       (kind == MEANDER_COMPOSITE && std::string("composite") == want);
            }
            if (!keep) return 1;
            char name[64];
            std::snprintf(name, sizeof(name), "%s_n%d_%04d.svg", c->cls.c_str(), order,
                          c->written + 1);
            if (int rc = write_svg(p.get(), c->dir / name); rc != 0) {
                c->rc = rc;
                return 0;
            }
            ++c->written;
            return 1;
        },
        &ctx, nullptr);
    if (ctx.rc != 0) return ctx.rc;
    if (s != MEANDER_OK) return api_error("enumeration failed");
    std::cout << "wrote " << ctx.written << (ctx.written == 1 ? " file to " : " files to ")
              << out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open meander toolkit: enumeration, classification, decomposition, counting"};
    app.require_subcommand(1);
    int threads = 0;
    std::string cache_flag;
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    app.add_option("--cache-dir", cache_flag,
                   "table cache directory (default $MEANDER_CACHE_DIR, else ./tables)");
    // global options stay valid after the subcommand name
    app.fallthrough();

    auto* c_enum = app.add_subcommand("enumerate", "list every meander of one order as jsonl");
    int enum_n = 0;
    std::string enum_out;
    c_enum->add_option("-n,--order", enum_n, "order to enumerate")->required();
    c_enum->add_option("-o,--out", enum_out, "write records to this file instead of stdout");

    auto* c_classify = app.add_subcommand("classify", "census of one order by prime class");
    int classify_n = 0;
    c_classify->add_option("-n,--order", classify_n, "order to classify")->required();

    auto* c_decompose =
        app.add_subcommand("decompose", "construction tree and disk graph of meanders");
    std::string dec_perm, dec_file;
    c_decompose->add_option("--perm", dec_perm, "crossing sequence, comma separated");
    c_decompose->add_option("--file", dec_file, "jsonl file of crossing sequences");

    auto* c_count = app.add_subcommand("count", "counting tables from the recursion");
    int count_max = MEANDER_MAX_TABLE;
    std::string count_mode = "corrected";
    c_count->add_option("--max", count_max, "deepest order for the recursion columns");
    c_count->add_option("--mode", count_mode, "corrected or literal insertion budget")
        ->check(CLI::IsMember({"corrected", "literal"}));

    auto* c_verify = app.add_subcommand("verify", "compare computed tables to the built-in table");
    int verify_max = MEANDER_MAX_TABLE;
    c_verify->add_option("--max", verify_max, "deepest order for the brute-force columns");

    auto* c_render = app.add_subcommand("render", "svg drawings of meanders");
    std::string render_perm, render_class = "all", render_out;
    int render_n = 0;
    c_render->add_option("--perm", render_perm, "single crossing sequence, comma separated");
    c_render->add_option("--class", render_class, "filter when rendering a whole order")
        ->check(CLI::IsMember({"irreducible", "snake", "composite", "all"}));
    c_render->add_option("-n,--order", render_n, "render every meander of this order");
    c_render->add_option("-o,--out", render_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_enum->parsed()) return cmd_enumerate(enum_n, threads, enum_out);
    if (c_classify->parsed()) return cmd_classify(classify_n, threads);
    if (c_decompose->parsed()) return cmd_decompose(dec_perm, dec_file);
    if (c_count->parsed()) return cmd_count(count_max, count_mode, threads, cache_flag);
    if (c_verify->parsed()) return cmd_verify(verify_max, threads, cache_flag);
    if (c_render->parsed())
        return cmd_render(render_perm, render_class, render_n, threads, render_out);
    return usage_error("no subcommand");
}
