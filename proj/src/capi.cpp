#include "meander.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "meander/census.hpp"
#include "meander/classify.hpp"
#include "meander/counting.hpp"
#include "meander/decompose.hpp"
#include "meander/disks.hpp"
#include "meander/enumerate.hpp"
#include "meander/perm.hpp"
#include "meander/serialize.hpp"
#include "meander/surgery.hpp"
#include "meander/tables_io.hpp"

struct meander_perm {
    meander::seq_t seq;
};

struct meander_tables {
    meander::table_set t;
    bool literal = false;
};

namespace {

thread_local std::string g_error = "ok";

meander_status fail(meander_status s, const std::string& what) {
    g_error = what;
    return s;
}

template <typename Fn>
meander_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const meander::not_permutation_error& e) {
        return fail(MEANDER_EINVAL, e.what());
    } catch (const meander::not_meander_error& e) {
        return fail(MEANDER_ENOTMEANDER, e.what());
    } catch (const meander::not_disk_error& e) {
        return fail(MEANDER_ENOTDISK, e.what());
    } catch (const meander::parity_error& e) {
        return fail(MEANDER_EPARITY, e.what());
    } catch (const meander::range_error& e) {
        return fail(MEANDER_ERANGE, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(MEANDER_EIO, e.what());
    } catch (const meander::integrity_error& e) {
        return fail(MEANDER_EDATA, e.what());
    } catch (const std::out_of_range& e) {
        return fail(MEANDER_ERANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(MEANDER_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(MEANDER_EDATA, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

meander_status string_result(const std::string& s, char** out) {
    if (!out) return fail(MEANDER_EINVAL, "null output pointer");
    *out = copy_string(s);
    if (!*out) return fail(MEANDER_EIO, "allocation failure");
    return MEANDER_OK;
}

meander_status need(const void* p) {
    if (!p) return fail(MEANDER_EINVAL, "null handle");
    return MEANDER_OK;
}

meander_status perm_result(meander::seq_t seq, meander_perm** out) {
    if (!out) return fail(MEANDER_EINVAL, "null output pointer");
    *out = new meander_perm{std::move(seq)};
    return MEANDER_OK;
}

meander_status disk_list(const std::vector<meander::disk>& ds, int* lo_hi, int capacity,
                         int* count) {
    if (!count) return fail(MEANDER_EINVAL, "null output pointer");
    *count = static_cast<int>(ds.size());
    if (capacity > 0 && !lo_hi) return fail(MEANDER_EINVAL, "null output pointer");
    const int store = std::min<int>(capacity, static_cast<int>(ds.size()));
    for (int i = 0; i < store; ++i) {
        lo_hi[2 * i] = ds[i].lo;
        lo_hi[2 * i + 1] = ds[i].hi;
    }
    return MEANDER_OK;
}

}  // namespace

extern "C" {

const char* meander_status_name(meander_status s) {
    switch (s) {
        case MEANDER_OK: return "ok";
        case MEANDER_EINVAL: return "invalid argument";
        case MEANDER_ENOTMEANDER: return "not a meander";
        case MEANDER_ENOTDISK: return "not a disk class";
        case MEANDER_EPARITY: return "parity mismatch";
        case MEANDER_ERANGE: return "out of range";
        case MEANDER_EIO: return "io failure";
        case MEANDER_EDATA: return "data integrity failure";
    }
    return "unknown";
}

const char* meander_last_error(void) { return g_error.c_str(); }

void meander_string_destroy(char* s) { std::free(s); }

meander_status meander_perm_create(const int* values, int n, meander_perm** out) {
    if (!values || n < 1) return fail(MEANDER_EINVAL, "need at least one value");
    return guarded([&] {
        meander::seq_t seq(values, values + n);
        if (!meander::validate(seq)) return fail(MEANDER_ENOTMEANDER, "arcs self-intersect");
        return perm_result(std::move(seq), out);
    });
}

void meander_perm_destroy(meander_perm* p) { delete p; }

int meander_perm_order(const meander_perm* p) {
    return p ? static_cast<int>(p->seq.size()) : 0;
}

const int* meander_perm_values(const meander_perm* p) {
    return p && !p->seq.empty() ? p->seq.data() : nullptr;
}

meander_status meander_check(const int* values, int n) {
    if (!values || n < 1) return fail(MEANDER_EINVAL, "need at least one value");
    return guarded([&]() -> meander_status {
        meander::seq_t seq(values, values + n);
        if (!meander::is_permutation(seq))
            return fail(MEANDER_EINVAL, "not a permutation of 1..n");
        const bool ok = n <= 32 ? meander::validate_small(values, n) : meander::validate(seq);
        if (!ok) return fail(MEANDER_ENOTMEANDER, "arcs self-intersect");
        return MEANDER_OK;
    });
}

meander_status meander_reverse_complement(const meander_perm* p, meander_perm** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return perm_result(meander::reverse_complement(p->seq), out); });
}

meander_status meander_pattern(const meander_perm* p, int lo, int hi, meander_perm** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return perm_result(meander::pattern_of(p->seq, lo, hi), out); });
}

meander_status meander_cut(const meander_perm* p, int lo, int hi, meander_perm** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return perm_result(meander::cut(p->seq, lo, hi), out); });
}

meander_status meander_insert(const meander_perm* host, int lo, int hi,
                              const meander_perm* guest, meander_perm** out) {
    if (meander_status s = need(host); s != MEANDER_OK) return s;
    if (meander_status s = need(guest); s != MEANDER_OK) return s;
    return guarded(
        [&] { return perm_result(meander::insert(host->seq, lo, hi, guest->seq), out); });
}

meander_status meander_arches(const meander_perm* p, int* lower, int* lower_pairs,
                              int* upper, int* upper_pairs, int* start_label,
                              int* finish_label, int* finish_below) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    if (!lower || !lower_pairs || !upper || !upper_pairs)
        return fail(MEANDER_EINVAL, "null output pointer");
    return guarded([&]() -> meander_status {
        const meander::arch_diagram d = meander::to_arches(p->seq);
        int k = 0;
        for (const auto& [a, b] : d.lower) {
            lower[k++] = a;
            lower[k++] = b;
        }
        *lower_pairs = static_cast<int>(d.lower.size());
        k = 0;
        for (const auto& [a, b] : d.upper) {
            upper[k++] = a;
            upper[k++] = b;
        }
        *upper_pairs = static_cast<int>(d.upper.size());
        if (start_label) *start_label = d.start_label;
        if (finish_label) *finish_label = d.finish_label;
        if (finish_below) *finish_below = d.finish_below ? 1 : 0;
        return MEANDER_OK;
    });
}

meander_status meander_enumerate(int n, int threads, meander_visit_fn visit, void* ctx,
                                 uint64_t* count) {
    if (n < 1 || n > MEANDER_MAX_ENUMERABLE)
        return fail(MEANDER_ERANGE, "order outside 1.." + std::to_string(MEANDER_MAX_ENUMERABLE));
    return guarded([&]() -> meander_status {
        uint64_t total;
        if (!visit) {
            total = meander::enumerate_count(n, threads);
        } else {
            total = meander::enumerate(n, threads, [&](const int* seq, int order) {
                return visit(seq, order, ctx) != 0;
            });
        }
        if (count) *count = total;
        return MEANDER_OK;
    });
}

meander_status meander_disk_classes(const meander_perm* p, int min_width, int* lo_hi,
                                    int capacity, int* count) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded(
        [&] { return disk_list(meander::disk_classes(p->seq, min_width), lo_hi, capacity, count); });
}

meander_status meander_articulations(const meander_perm* p, int* lo_hi, int capacity,
                                     int* count) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded(
        [&] { return disk_list(meander::articulation_classes(p->seq), lo_hi, capacity, count); });
}

meander_status meander_graph_counts(const meander_perm* p, int* verts, int* edges) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&]() -> meander_status {
        const meander::decomposition_graph g = meander::build_graph(p->seq);
        if (verts) *verts = static_cast<int>(g.verts.size());
        if (edges) *edges = static_cast<int>(g.edges.size());
        return MEANDER_OK;
    });
}

meander_status meander_graph_dot(const meander_perm* p, char** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return string_result(meander::graph_dot(p->seq), out); });
}

meander_status meander_classify(const meander_perm* p, meander_kind* kind, int* inverse) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&]() -> meander_status {
        const meander::classification c = meander::classify(p->seq);
        if (kind) *kind = static_cast<meander_kind>(c.kind);
        if (inverse) *inverse = c.inverse ? 1 : 0;
        return MEANDER_OK;
    });
}

meander_status meander_root_black(const meander_perm* p, int* black) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&]() -> meander_status {
        const bool b = meander::root_black(p->seq);
        if (black) *black = b ? 1 : 0;
        return MEANDER_OK;
    });
}

meander_status meander_decompose_json(const meander_perm* p, char** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded(
        [&] { return string_result(meander::tree_json(meander::decompose(p->seq)), out); });
}

meander_status meander_jsonl(const meander_perm* p, char** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return string_result(meander::jsonl_line(p->seq), out); });
}

meander_status meander_svg(const meander_perm* p, char** out) {
    if (meander_status s = need(p); s != MEANDER_OK) return s;
    return guarded([&] { return string_result(meander::svg_document(p->seq), out); });
}

meander_status meander_census_run(int n, int threads, int with_roots, meander_census* out) {
    if (!out) return fail(MEANDER_EINVAL, "null output pointer");
    if (n < 1 || n > MEANDER_MAX_CENSUS)
        return fail(MEANDER_ERANGE, "order outside 1.." + std::to_string(MEANDER_MAX_CENSUS));
    return guarded([&]() -> meander_status {
        const meander::census_result c = meander::run_census(n, threads, with_roots != 0);
        *out = meander_census{};
        out->n = c.n;
        out->total = c.total;
        out->irreducible = c.irreducible;
        out->snake = c.snake;
        out->composite = c.composite;
        out->black_started = c.black_started;
        out->white_started = c.white_started;
        for (const auto& [cups, cnt] : c.cups_hist)
            if (cups >= 0 && cups <= MEANDER_MAX_ENUMERABLE / 2) out->cups_hist[cups] = cnt;
        for (const auto& [cups, cnt] : c.irr_by_cups)
            if (cups >= 0 && cups <= MEANDER_MAX_ENUMERABLE / 2) out->irr_by_cups[cups] = cnt;
        return MEANDER_OK;
    });
}

meander_status meander_tables_build(int max_n, int threads, meander_tables** out) {
    if (!out) return fail(MEANDER_EINVAL, "null output pointer");
    if (max_n < 1 || max_n > MEANDER_MAX_TABLE)
        return fail(MEANDER_ERANGE, "order outside 1.." + std::to_string(MEANDER_MAX_TABLE));
    return guarded([&]() -> meander_status {
        *out = new meander_tables{meander::build_tables(max_n, threads), false};
        return MEANDER_OK;
    });
}

meander_status meander_tables_load(const char* dir, meander_tables** out) {
    if (!dir || !out) return fail(MEANDER_EINVAL, "null argument");
    return guarded([&]() -> meander_status {
        auto t = meander::load_tables(dir);
        if (!t) return fail(MEANDER_EIO, std::string("no readable tables under ") + dir);
        *out = new meander_tables{std::move(*t), false};
        return MEANDER_OK;
    });
}

meander_status meander_tables_save(const meander_tables* t, const char* dir) {
    if (meander_status s = need(t); s != MEANDER_OK) return s;
    if (!dir) return fail(MEANDER_EINVAL, "null directory");
    return guarded([&]() -> meander_status {
        meander::save_tables(dir, t->t);
        return MEANDER_OK;
    });
}

void meander_tables_destroy(meander_tables* t) { delete t; }

int meander_tables_rows(const meander_tables* t) { return t ? t->t.rows : 0; }

int meander_tables_full_rows(const meander_tables* t) {
    return t ? meander::full_rows(t->t) : 0;
}

const char* meander_tables_cell(const meander_tables* t, int n, int col) {
    if (!t || n < 1 || n > t->t.rows || col < 0 || col >= meander::table_col_count)
        return nullptr;
    return t->t.cells[n - 1][col].c_str();
}

int meander_tables_irr_rows(const meander_tables* t) {
    return t ? static_cast<int>(t->t.irr_rows.size()) : 0;
}

meander_status meander_tables_irr_row(const meander_tables* t, int idx, int* n, int* c,
                                      const char** count) {
    if (meander_status s = need(t); s != MEANDER_OK) return s;
    if (idx < 0 || idx >= static_cast<int>(t->t.irr_rows.size()))
        return fail(MEANDER_ERANGE, "row index out of range");
    const auto& [rn, rc, cnt] = t->t.irr_rows[idx];
    if (n) *n = rn;
    if (c) *c = rc;
    if (count) *count = cnt.c_str();
    return MEANDER_OK;
}

meander_status meander_tables_literal(const meander_tables* t, meander_tables** out) {
    if (meander_status s = need(t); s != MEANDER_OK) return s;
    if (!out) return fail(MEANDER_EINVAL, "null output pointer");
    return guarded([&]() -> meander_status {
        const int max_n = meander::full_rows(t->t);
        if (max_n < 1) return fail(MEANDER_EINVAL, "base tables hold no computed rows");
        const meander::irr_table_t irr = meander::irr_from(t->t);
        const meander::count_tables ct = meander::run_recursion(max_n, /*literal=*/true, irr);
        meander::table_set lit = t->t;
        for (int n = 1; n <= max_n; ++n) {
            auto& row = lit.cells[n - 1];
            row[static_cast<int>(meander::table_col::m)] = ct.m[n].str();
            row[static_cast<int>(meander::table_col::black)] = ct.black[n].str();
            row[static_cast<int>(meander::table_col::white)] = ct.white[n].str();
        }
        *out = new meander_tables{std::move(lit), true};
        return MEANDER_OK;
    });
}

}  // extern "C"
