#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "golden.hpp"
#include "meander/classify.hpp"
#include "meander/decompose.hpp"
#include "meander/disks.hpp"
#include "meander/enumerate.hpp"
#include "meander/perm.hpp"
#include "meander/surgery.hpp"

using meander::disk;
using meander::meander_kind;
using meander::seq_t;

namespace {

std::vector<seq_t> all_meanders(int n) {
    std::vector<seq_t> out;
    meander::enumerate(n, 1, [&](const int* seq, int order) {
        out.emplace_back(seq, seq + order);
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("disk classes of a fixed order-8 meander") {
    const seq_t s{3, 6, 7, 2, 1, 8, 5, 4};
    CHECK(meander::disk_classes(s, 2) ==
          std::vector<disk>{{1, 2}, {4, 5}, {6, 7}, {1, 8}});
    CHECK(meander::cups(s) == std::vector<disk>{{1, 2}, {4, 5}, {6, 7}});
    CHECK(meander::disk_classes(s, 1).size() == 12);  // 8 singletons + the above
    CHECK(meander::articulation_classes(s).empty());
}

TEST_CASE("identity order 9 has every interval as a class") {
    seq_t s{1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto g = meander::build_graph(s);
    CHECK(g.verts.size() == 45);  // 9*10/2 intervals
    CHECK(g.edges.size() == 72);  // each non-full interval covers two ways... and singleton ends one
    CHECK(meander::cups(s).size() == 8);
}

TEST_CASE("covering graph of the order-3 snake, exact edge set") {
    const auto g = meander::build_graph({1, 2, 3});
    CHECK(g.verts ==
          std::vector<disk>{{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {1, 3}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {0, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}});
}

TEST_CASE("graph shapes at order 9") {
    // hub-and-spokes: only singleton classes under the full interval
    const auto star = meander::build_graph({7, 6, 1, 2, 5, 8, 9, 4, 3});
    CHECK(star.verts.size() == 14);
    const auto other = meander::build_graph({9, 6, 7, 8, 5, 4, 1, 2, 3});
    CHECK(other.verts.size() == 25);
    CHECK(other.edges.size() == 32);
    // both order-9 irreducibles have no articulation class
    CHECK(meander::articulation_classes({7, 6, 1, 2, 5, 8, 9, 4, 3}).empty());
    CHECK(meander::articulation_classes({3, 4, 9, 8, 5, 2, 1, 6, 7}).empty());
    // the rich graph belongs to a composite meander
    CHECK(meander::articulation_classes({9, 6, 7, 8, 5, 4, 1, 2, 3}) ==
          std::vector<disk>{{1, 3}, {1, 4}, {6, 8}, {6, 9}});
}

TEST_CASE("dot rendering is stable and carries the covering edges") {
    const auto dot = meander::graph_dot({1, 2, 3});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"[1..3]\"") != std::string::npos);
    CHECK(dot.find("\"[1]\" -> \"[1..2]\"") != std::string::npos);
    CHECK(dot == meander::graph_dot({1, 2, 3}));
}

TEST_CASE("classification of hand-checked sequences") {
    CHECK(meander::classify({1}).kind == meander_kind::irreducible);
    CHECK(meander::classify({1, 2}).kind == meander_kind::irreducible);
    const auto direct = meander::classify({1, 2, 3});
    CHECK(direct.kind == meander_kind::snake);
    CHECK_FALSE(direct.inverse);
    const auto inverse = meander::classify({3, 2, 1});
    CHECK(inverse.kind == meander_kind::snake);
    CHECK(inverse.inverse);
    CHECK(meander::classify({3, 6, 7, 2, 1, 8, 5, 4}).kind == meander_kind::irreducible);
    CHECK(meander::classify({3, 4, 9, 8, 5, 2, 1, 6, 7}).kind == meander_kind::irreducible);
    CHECK(meander::classify({7, 6, 1, 2, 5, 8, 9, 4, 3}).kind == meander_kind::irreducible);
    CHECK(meander::classify({7, 8, 9, 6, 5, 2, 3, 4, 1}).kind == meander_kind::composite);
}

TEST_CASE("classification is total and matches the prime criterion") {
    // snakes are exactly identity/reversal of order >= 3; prime (irreducible
    // or snake) is exactly the absence of articulation classes
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t snakes = 0;
        for (const auto& s : all_meanders(n)) {
            const auto c = meander::classify(s);
            const bool prime = c.kind != meander_kind::composite;
            CHECK(prime == meander::articulation_classes(s).empty());
            const bool straight = meander::is_identity(s) || meander::is_reversal(s);
            CHECK((c.kind == meander_kind::snake) == (straight && n >= 3));
            if (c.kind == meander_kind::snake) ++snakes;
        }
        CHECK(snakes == (n >= 3 ? 1 + n % 2 : 0));
    }
}

TEST_CASE("frame orientation and patterns of elementary and wide disks") {
    const seq_t s{3, 6, 7, 2, 1, 8, 5, 4};
    CHECK_FALSE(meander::frame_left(s, 1, 2));  // both stubs attach on the right
    CHECK(meander::pattern_of(s, 1, 2) == seq_t{1, 2});
    CHECK(meander::frame_left(s, 6, 7));
    CHECK(meander::pattern_of(s, 6, 7) == seq_t{1, 2});
    const seq_t fig{7, 8, 9, 6, 5, 2, 3, 4, 1};
    CHECK(meander::frame_left(fig, 2, 4));  // odd widths always read left
    CHECK(meander::pattern_of(fig, 2, 4) == seq_t{1, 2, 3});
    CHECK(meander::pattern_of(fig, 7, 9) == seq_t{1, 2, 3});
    CHECK_THROWS_AS(meander::pattern_of(s, 2, 3), meander::not_disk_error);
    CHECK_THROWS_AS(meander::pattern_of(s, 1, 9), meander::not_disk_error);
}

TEST_CASE("cutting the selected classes of the two-factor example") {
    const seq_t fig{7, 8, 9, 6, 5, 2, 3, 4, 1};
    CHECK(meander::cut(fig, 2, 4) == seq_t{5, 6, 7, 4, 3, 2, 1});
    CHECK(meander::cut({5, 6, 7, 4, 3, 2, 1}, 5, 7) == seq_t{5, 4, 3, 2, 1});
    CHECK(meander::cut(fig, 7, 9) == seq_t{7, 6, 5, 2, 3, 4, 1});
    // cup collapse keeps the frame orientation in host labels
    CHECK(meander::cut({3, 6, 7, 2, 1, 8, 5, 4}, 1, 2) == seq_t{3, 6, 7, 2, 1, 8, 5, 4});
}

TEST_CASE("insertion rebuilds the two-factor example") {
    CHECK(meander::insert({5, 4, 3, 2, 1}, 5, 5, {1, 2, 3}) == seq_t{5, 6, 7, 4, 3, 2, 1});
    CHECK(meander::insert({5, 6, 7, 4, 3, 2, 1}, 2, 2, {1, 2, 3}) ==
          seq_t{7, 8, 9, 6, 5, 2, 3, 4, 1});
    CHECK_THROWS_AS(meander::insert({1, 2}, 1, 2, {1, 2, 3}), meander::parity_error);
    CHECK_THROWS_AS(meander::insert({1, 2}, 1, 1, {1, 2}), meander::parity_error);
    CHECK_THROWS_AS(meander::insert({1, 2, 3}, 1, 3, {1, 2, 3}), meander::not_disk_error);
    CHECK_THROWS_AS(meander::insert({3, 6, 7, 2, 1, 8, 5, 4}, 2, 3, {1, 2}),
                    meander::not_disk_error);
}

TEST_CASE("insert then cut is the identity on every host and site") {
    // hosts through order 6, guests through order 4, every elementary disk
    std::vector<seq_t> guests;
    for (int m = 1; m <= 4; ++m)
        for (const auto& g : all_meanders(m)) guests.push_back(g);
    int cases = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& host : all_meanders(n))
            for (const auto& d : meander::disk_classes(host, 1)) {
                const int w = d.width();
                if (w > 2) continue;
                for (const auto& g : guests) {
                    if ((static_cast<int>(g.size()) - w) % 2) continue;
                    const seq_t grown = meander::insert(host, d.lo, d.hi, g);
                    CHECK(meander::validate(grown));
                    const int glo = d.lo;
                    const int ghi = d.lo + static_cast<int>(g.size()) - 1;
                    CHECK(meander::cut(grown, glo, ghi) == host);
                    CHECK(meander::pattern_of(grown, glo, ghi) == g);
                    ++cases;
                }
            }
    CHECK(cases > 500);
}

TEST_CASE("prime factor selection on the worked examples") {
    CHECK(meander::select_s({7, 8, 9, 6, 5, 2, 3, 4, 1}) ==
          std::vector<disk>{{2, 4}, {7, 9}});
    const seq_t fig5{7, 10, 11, 6, 5, 4, 3, 2, 1, 12, 15, 14, 13, 16, 9, 8};
    CHECK(meander::select_s(fig5) == std::vector<disk>{{1, 6}, {13, 15}});
    CHECK_THROWS_AS(meander::select_s({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(meander::select_s({3, 6, 7, 2, 1, 8, 5, 4}), std::invalid_argument);
}

TEST_CASE("construction trees of the worked examples") {
    CHECK(meander::tree_json(meander::decompose({7, 8, 9, 6, 5, 2, 3, 4, 1})) ==
          "{\"color\":\"white\",\"ord\":5,\"children\":["
          "{\"color\":\"white\",\"ord\":3,\"children\":[]},"
          "{\"color\":\"white\",\"ord\":3,\"children\":[]}]}");
    const seq_t fig5{7, 10, 11, 6, 5, 4, 3, 2, 1, 12, 15, 14, 13, 16, 9, 8};
    CHECK(meander::tree_json(meander::decompose(fig5)) ==
          "{\"color\":\"black\",\"ord\":8,\"children\":["
          "{\"color\":\"white\",\"ord\":6,\"children\":[]},"
          "{\"color\":\"white\",\"ord\":3,\"children\":["
          "{\"color\":\"white\",\"ord\":3,\"children\":[]}]}]}");
    CHECK(meander::tree_json(meander::decompose({3, 6, 7, 2, 1, 8, 5, 4})) ==
          "{\"color\":\"black\",\"ord\":8,\"children\":[]}");
    CHECK(meander::tree_json(meander::decompose({1, 2, 3})) ==
          "{\"color\":\"white\",\"ord\":3,\"children\":[]}");
    CHECK(meander::tree_json(meander::decompose({1})) ==
          "{\"color\":\"black\",\"ord\":1,\"children\":[]}");
}

TEST_CASE("root colors of the worked examples") {
    CHECK(meander::root_black({1}));
    CHECK(meander::root_black({1, 2}));
    CHECK_FALSE(meander::root_black({1, 2, 3}));
    CHECK(meander::root_black({3, 6, 7, 2, 1, 8, 5, 4}));
    CHECK_FALSE(meander::root_black({7, 8, 9, 6, 5, 2, 3, 4, 1}));
    CHECK(meander::root_black({7, 10, 11, 6, 5, 4, 3, 2, 1, 12, 15, 14, 13, 16, 9, 8}));
}

TEST_CASE("tree order identity on every meander") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& s : all_meanders(n))
            CHECK(meander::tree_ord(meander::decompose(s)) == n);
}

TEST_CASE("root color census matches the frozen splits") {
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t black = 0, white = 0, small = 0;
        for (const auto& s : all_meanders(n)) {
            const auto t = meander::decompose(s);
            (t.black ? black : white) += 1;
            if (t.black && t.ord <= 2) ++small;
        }
        CHECK(black == golden::census[n].black);
        CHECK(white == golden::census[n].white);
        CHECK(small == golden::census[n].root_small);
    }
}
