#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "golden.hpp"
#include "meander.h"

namespace {

meander_perm* mk(std::initializer_list<int> v) {
    meander_perm* p = nullptr;
    REQUIRE(meander_perm_create(std::data(v), static_cast<int>(v.size()), &p) ==
            MEANDER_OK);
    return p;
}

std::vector<int> vals(const meander_perm* p) {
    const int* v = meander_perm_values(p);
    return {v, v + meander_perm_order(p)};
}

struct counter_ctx {
    std::uint64_t seen = 0;
    std::uint64_t limit = 0;  // 0: never stop
};

int counting_visit(const int*, int, void* ctx) {
    auto* c = static_cast<counter_ctx*>(ctx);
    ++c->seen;
    return c->limit == 0 || c->seen < c->limit;
}

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    meander_string_destroy(s);
    return out;
}

}  // namespace

TEST_CASE("status names and handle lifecycle") {
    CHECK(std::string(meander_status_name(MEANDER_OK)) == "ok");
    CHECK(std::string(meander_status_name(MEANDER_EPARITY)) == "parity mismatch");
    meander_perm* p = mk({3, 6, 7, 2, 1, 8, 5, 4});
    CHECK(meander_perm_order(p) == 8);
    CHECK(vals(p) == std::vector<int>{3, 6, 7, 2, 1, 8, 5, 4});
    meander_perm_destroy(p);
    meander_perm_destroy(nullptr);  // tolerated
}

TEST_CASE("creation failures set the thread error message") {
    meander_perm* p = nullptr;
    const int dup[] = {1, 1};
    CHECK(meander_perm_create(dup, 2, &p) == MEANDER_EINVAL);
    CHECK(std::strlen(meander_last_error()) > 0);
    const int crossing[] = {2, 1, 3};
    CHECK(meander_perm_create(crossing, 3, &p) == MEANDER_ENOTMEANDER);
}

TEST_CASE("allocation-free check mirrors creation") {
    const int good[] = {7, 8, 9, 6, 5, 2, 3, 4, 1};
    CHECK(meander_check(good, 9) == MEANDER_OK);
    const int crossing[] = {2, 1, 3};
    CHECK(meander_check(crossing, 3) == MEANDER_ENOTMEANDER);
    const int dup[] = {2, 2};
    CHECK(meander_check(dup, 2) == MEANDER_EINVAL);
}

TEST_CASE("reverse complement") {
    meander_perm* p = mk({3, 6, 7, 2, 1, 8, 5, 4});
    meander_perm* rc = nullptr;
    REQUIRE(meander_reverse_complement(p, &rc) == MEANDER_OK);
    CHECK(vals(rc) == std::vector<int>{5, 4, 1, 8, 7, 2, 3, 6});
    meander_perm_destroy(rc);
    meander_perm_destroy(p);
}

TEST_CASE("surgery chain rebuilds the worked nine-crossing example") {
    meander_perm* host = mk({5, 4, 3, 2, 1});
    meander_perm* guest = mk({1, 2, 3});
    meander_perm* mid = nullptr;
    REQUIRE(meander_insert(host, 5, 5, guest, &mid) == MEANDER_OK);
    CHECK(vals(mid) == std::vector<int>{5, 6, 7, 4, 3, 2, 1});
    meander_perm* full = nullptr;
    REQUIRE(meander_insert(mid, 2, 2, guest, &full) == MEANDER_OK);
    CHECK(vals(full) == std::vector<int>{7, 8, 9, 6, 5, 2, 3, 4, 1});

    meander_perm* back = nullptr;
    REQUIRE(meander_cut(full, 2, 4, &back) == MEANDER_OK);
    CHECK(vals(back) == vals(mid));
    meander_perm* pat = nullptr;
    REQUIRE(meander_pattern(full, 2, 4, &pat) == MEANDER_OK);
    CHECK(vals(pat) == std::vector<int>{1, 2, 3});

    meander_perm* bad = nullptr;
    meander_perm* even_guest = mk({1, 2});
    CHECK(meander_insert(host, 5, 5, even_guest, &bad) == MEANDER_EPARITY);
    meander_perm* split = mk({3, 6, 7, 2, 1, 8, 5, 4});
    CHECK(meander_pattern(split, 2, 3, &bad) == MEANDER_ENOTDISK);

    meander_perm_destroy(split);
    meander_perm_destroy(even_guest);
    meander_perm_destroy(pat);
    meander_perm_destroy(back);
    meander_perm_destroy(full);
    meander_perm_destroy(mid);
    meander_perm_destroy(guest);
    meander_perm_destroy(host);
}

TEST_CASE("arch systems come out in curve order") {
    meander_perm* p = mk({3, 6, 7, 2, 1, 8, 5, 4});
    int lower[8], upper[8];
    int nlow = 0, nup = 0, start = 0, finish = 0, below = -1;
    REQUIRE(meander_arches(p, lower, &nlow, upper, &nup, &start, &finish, &below) ==
            MEANDER_OK);
    CHECK(nlow == 4);
    CHECK(nup == 3);
    const int explow[] = {3, 6, 7, 2, 1, 8, 5, 4};
    const int expup[] = {6, 7, 2, 1, 8, 5};
    CHECK(std::memcmp(lower, explow, sizeof explow) == 0);
    CHECK(std::memcmp(upper, expup, sizeof expup) == 0);
    CHECK(start == 3);
    CHECK(finish == 4);
    CHECK(below == 0);
    meander_perm_destroy(p);
}

TEST_CASE("enumeration with and without a visitor") {
    counter_ctx ctx;
    uint64_t count = 0;
    REQUIRE(meander_enumerate(6, 1, counting_visit, &ctx, &count) == MEANDER_OK);
    CHECK(count == 14);
    CHECK(ctx.seen == 14);

    REQUIRE(meander_enumerate(9, 0, nullptr, nullptr, &count) == MEANDER_OK);
    CHECK(count == 262);

    counter_ctx stopper{0, 3};
    REQUIRE(meander_enumerate(8, 1, counting_visit, &stopper, &count) == MEANDER_OK);
    CHECK(count == 3);

    CHECK(meander_enumerate(21, 1, nullptr, nullptr, &count) == MEANDER_ERANGE);
}

TEST_CASE("disk classes report the required capacity") {
    meander_perm* p = mk({3, 6, 7, 2, 1, 8, 5, 4});
    int pairs[24];
    int count = 0;
    REQUIRE(meander_disk_classes(p, 1, pairs, 12, &count) == MEANDER_OK);
    CHECK(count == 12);
    // sorted by (width, lo): the eight singletons first
    CHECK(pairs[0] == 1);
    CHECK(pairs[1] == 1);
    CHECK(pairs[16] == 1);
    CHECK(pairs[17] == 2);
    CHECK(pairs[22] == 1);
    CHECK(pairs[23] == 8);

    int two[4] = {0, 0, 0, 0};
    REQUIRE(meander_disk_classes(p, 1, two, 2, &count) == MEANDER_OK);
    CHECK(count == 12);  // required capacity, not what fit
    CHECK(two[0] == 1);
    CHECK(two[3] == 2);

    REQUIRE(meander_disk_classes(p, 2, pairs, 12, &count) == MEANDER_OK);
    CHECK(count == 4);
    meander_perm_destroy(p);
}

TEST_CASE("articulation classes of the nine-crossing example") {
    meander_perm* p = mk({7, 8, 9, 6, 5, 2, 3, 4, 1});
    int pairs[8];
    int count = 0;
    REQUIRE(meander_articulations(p, pairs, 4, &count) == MEANDER_OK);
    CHECK(count == 4);
    const int expected[] = {1, 4, 2, 4, 6, 9, 7, 9};
    CHECK(std::memcmp(pairs, expected, sizeof expected) == 0);
    meander_perm_destroy(p);
}

TEST_CASE("decomposition graph summary and dot form") {
    meander_perm* p = mk({1, 2, 3});
    int verts = 0, edges = 0;
    REQUIRE(meander_graph_counts(p, &verts, &edges) == MEANDER_OK);
    CHECK(verts == 6);
    CHECK(edges == 6);
    char* dot = nullptr;
    REQUIRE(meander_graph_dot(p, &dot) == MEANDER_OK);
    const std::string text = take(dot);
    CHECK(text.find("digraph") != std::string::npos);
    meander_perm_destroy(p);
}

TEST_CASE("classification and root color") {
    meander_perm* id3 = mk({1, 2, 3});
    meander_kind kind;
    int inverse = -1;
    REQUIRE(meander_classify(id3, &kind, &inverse) == MEANDER_OK);
    CHECK(kind == MEANDER_SNAKE);
    CHECK(inverse == 0);
    meander_perm_destroy(id3);

    meander_perm* rev3 = mk({3, 2, 1});
    REQUIRE(meander_classify(rev3, &kind, &inverse) == MEANDER_OK);
    CHECK(kind == MEANDER_SNAKE);
    CHECK(inverse == 1);
    meander_perm_destroy(rev3);

    meander_perm* irr = mk({3, 6, 7, 2, 1, 8, 5, 4});
    REQUIRE(meander_classify(irr, &kind, &inverse) == MEANDER_OK);
    CHECK(kind == MEANDER_IRREDUCIBLE);
    meander_perm_destroy(irr);

    meander_perm* fig = mk({7, 8, 9, 6, 5, 2, 3, 4, 1});
    REQUIRE(meander_classify(fig, &kind, &inverse) == MEANDER_OK);
    CHECK(kind == MEANDER_COMPOSITE);
    int black = -1;
    REQUIRE(meander_root_black(fig, &black) == MEANDER_OK);
    CHECK(black == 0);
    meander_perm_destroy(fig);

    meander_perm* wide =
        mk({7, 10, 11, 6, 5, 4, 3, 2, 1, 12, 15, 14, 13, 16, 9, 8});
    REQUIRE(meander_root_black(wide, &black) == MEANDER_OK);
    CHECK(black == 1);
    meander_perm_destroy(wide);
}

TEST_CASE("construction tree serialization") {
    meander_perm* fig = mk({7, 8, 9, 6, 5, 2, 3, 4, 1});
    char* json = nullptr;
    REQUIRE(meander_decompose_json(fig, &json) == MEANDER_OK);
    CHECK(take(json) ==
          "{\"color\":\"white\",\"ord\":5,\"children\":["
          "{\"color\":\"white\",\"ord\":3,\"children\":[]},"
          "{\"color\":\"white\",\"ord\":3,\"children\":[]}]}");
    meander_perm_destroy(fig);
}

TEST_CASE("record and drawing output") {
    meander_perm* p = mk({3, 6, 7, 2, 1, 8, 5, 4});
    char* line = nullptr;
    REQUIRE(meander_jsonl(p, &line) == MEANDER_OK);
    CHECK(take(line) == "{\"n\":8,\"perm\":[3,6,7,2,1,8,5,4]}");
    char* svg = nullptr;
    REQUIRE(meander_svg(p, &svg) == MEANDER_OK);
    const std::string doc = take(svg);
    CHECK(doc.rfind("<svg", 0) == 0);
    CHECK(doc.find("</svg>") != std::string::npos);
    meander_perm_destroy(p);
}

TEST_CASE("census sweep at order eight") {
    meander_census c;
    REQUIRE(meander_census_run(8, 0, 1, &c) == MEANDER_OK);
    CHECK(c.n == 8);
    CHECK(c.total == 81);
    CHECK(c.irreducible == 2);
    CHECK(c.snake == 1);
    CHECK(c.composite == 78);
    CHECK(c.black_started == 52);
    CHECK(c.white_started == 29);
    CHECK(c.cups_hist[2] == 2);
    CHECK(c.cups_hist[3] == 12);
    CHECK(c.cups_hist[4] == 33);
    CHECK(c.cups_hist[7] == 1);
    CHECK(c.irr_by_cups[3] == 2);
    CHECK(c.irr_by_cups[4] == 0);

    meander_census quick;
    REQUIRE(meander_census_run(8, 0, 0, &quick) == MEANDER_OK);
    CHECK(quick.total == 81);
    CHECK(quick.black_started == 0);

    CHECK(meander_census_run(15, 0, 0, &c) == MEANDER_ERANGE);
}

TEST_CASE("table build, cells, and the literal variant") {
    meander_tables* t = nullptr;
    REQUIRE(meander_tables_build(8, 0, &t) == MEANDER_OK);
    CHECK(meander_tables_rows(t) == 36);
    CHECK(meander_tables_full_rows(t) == 8);
    CHECK(std::string(meander_tables_cell(t, 8, MEANDER_COL_M)) == "81");
    CHECK(std::string(meander_tables_cell(t, 8, MEANDER_COL_BLACK)) == "52");
    CHECK(std::string(meander_tables_cell(t, 8, MEANDER_COL_IRR)) == "2");
    CHECK(std::string(meander_tables_cell(t, 9, MEANDER_COL_M)).empty());
    CHECK(std::string(meander_tables_cell(t, 36, MEANDER_COL_ITER)) ==
          "137394914285538");
    CHECK(std::string(meander_tables_cell(t, 3, MEANDER_COL_SNAKE)) == "2");
    CHECK(meander_tables_cell(t, 37, MEANDER_COL_M) == nullptr);
    CHECK(meander_tables_cell(t, 0, MEANDER_COL_M) == nullptr);

    REQUIRE(meander_tables_irr_rows(t) == 3);  // orders 1, 2, 8
    int n = 0, c = 0;
    const char* cnt = nullptr;
    REQUIRE(meander_tables_irr_row(t, 2, &n, &c, &cnt) == MEANDER_OK);
    CHECK(n == 8);
    CHECK(c == 3);
    CHECK(std::string(cnt) == "2");
    CHECK(meander_tables_irr_row(t, 3, &n, &c, &cnt) == MEANDER_ERANGE);

    meander_tables* lit = nullptr;
    REQUIRE(meander_tables_literal(t, &lit) == MEANDER_OK);
    CHECK(std::string(meander_tables_cell(lit, 3, MEANDER_COL_M)) == "2");
    CHECK(std::string(meander_tables_cell(lit, 4, MEANDER_COL_M)) == "8");
    CHECK(std::string(meander_tables_cell(lit, 8, MEANDER_COL_M)) == "863232");
    CHECK(std::string(meander_tables_cell(lit, 8, MEANDER_COL_IRR)) == "2");
    meander_tables_destroy(lit);

    const auto dir = std::filesystem::temp_directory_path() / "meander_capi_tables";
    std::filesystem::remove_all(dir);
    REQUIRE(meander_tables_save(t, dir.string().c_str()) == MEANDER_OK);
    meander_tables* back = nullptr;
    REQUIRE(meander_tables_load(dir.string().c_str(), &back) == MEANDER_OK);
    CHECK(meander_tables_full_rows(back) == 8);
    CHECK(std::string(meander_tables_cell(back, 8, MEANDER_COL_M)) == "81");
    meander_tables_destroy(back);
    std::filesystem::remove_all(dir);

    meander_tables* missing = nullptr;
    CHECK(meander_tables_load("/nonexistent/meander/cache", &missing) == MEANDER_EIO);
    CHECK(missing == nullptr);

    meander_tables_destroy(t);
}
