#include "meander/counting.hpp"

#include <algorithm>

#include "meander/census.hpp"

namespace meander {

bigint multinomial(long long slots, const parts_t& parts) {
    const long long k = static_cast<long long>(parts.size());
    if (slots < k) return 0;
    bigint num = 1;
    for (long long i = 0; i < k; ++i) num *= slots - i;
    bigint denom = 1;  // product of multiplicity factorials; parts arrive sorted
    long long run = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && parts[i] == parts[i - 1])
            ++run;
        else
            run = 1;
        denom *= run;
    }
    if (num % denom != 0) throw integrity_error("multinomial not integral");
    return num / denom;
}

bigint consecutive_pair_sets(int n, int k) {
    if (k < 0 || n - k < 0 || k > n - k) return 0;
    bigint r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - k - i;
        r /= i + 1;
    }
    return r;
}

std::vector<parts_t> budget_partitions(int budget, const std::vector<int>& allowed) {
    std::vector<parts_t> out;
    parts_t cur;
    const auto rec = [&](int rem, std::size_t idx, const auto& self) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = idx; j < allowed.size(); ++j) {
            const int cost = part_budget(allowed[j]);
            if (cost > rem) break;
            cur.push_back(allowed[j]);
            self(rem - cost, j, self);
            cur.pop_back();
        }
    };
    rec(budget, 0, rec);
    return out;
}

std::vector<insertion_triple> insertion_triples(int budget, int max_part) {
    std::vector<int> blacks, whites, odd_whites;
    for (int i = 4; i <= max_part; ++i) blacks.push_back(i);
    for (int i = 3; i <= max_part; ++i) whites.push_back(i);
    for (int i = 3; i <= max_part; i += 2) odd_whites.push_back(i);
    std::vector<insertion_triple> out;
    for (int bb = 0; bb <= budget; ++bb)
        for (const parts_t& mb : budget_partitions(bb, blacks))
            for (int ww = 0; ww <= budget - bb; ++ww)
                for (const parts_t& mw : budget_partitions(ww, whites))
                    for (const parts_t& nv : budget_partitions(budget - bb - ww, odd_whites))
                        out.push_back({mb, mw, nv});
    return out;
}

irr_table_t brute_irreducible_table(int max_n, int threads) {
    if (max_n < 1 || max_n > max_table_order)
        throw range_error("irreducible table bounded by brute force to order 14");
    irr_table_t out;
    for (int n = 1; n <= max_n; ++n)
        out[n] = run_census(n, threads, false).irr_by_cups;
    return out;
}

std::uint64_t snake_count(int n) { return n >= 3 ? 1 + n % 2 : 0; }

namespace {

void split_parity(const parts_t& mu, parts_t& odd, parts_t& even) {
    odd.clear();
    even.clear();
    for (int i : mu) (i % 2 ? odd : even).push_back(i);
}

bigint halved(const bigint& v) {
    if (v % 2 != 0) throw integrity_error("expected an even count to halve");
    return v / 2;
}

struct recursion {
    const std::vector<bigint>& proper;  // irreducible-rooted, order >= 4
    const std::vector<bigint>& white;
    parts_t odd_b, even_b, odd_w, even_w;

    bigint prod_black(const parts_t& mu) const {
        bigint r = 1;
        for (int i : mu) r *= proper[i];
        return r;
    }
    bigint prod_white(const parts_t& mu, bool halve) const {
        bigint r = 1;
        for (int i : mu) r *= halve ? halved(white[i]) : white[i];
        return r;
    }

    // factors inserted around an irreducible root of order n with c cups:
    // even factors into cups, halved odd whites at the surviving cup
    // crossings, full odd whites at the free crossings, odd blacks anywhere
    // left
    bigint black_root_ways(int n, int c, const insertion_triple& t) {
        split_parity(t.black, odd_b, even_b);
        split_parity(t.white, odd_w, even_w);
        const int k2 = static_cast<int>(even_b.size() + even_w.size());
        bigint r = multinomial(c, even_b) * prod_black(even_b);
        r *= multinomial(c - static_cast<int>(even_b.size()), even_w) * prod_white(even_w, false);
        r *= multinomial(2 * (c - k2), t.cup_white) * prod_white(t.cup_white, true);
        r *= multinomial(n - 2 * c, odd_w) * prod_white(odd_w, false);
        r *= multinomial(n - 2 * k2 - static_cast<int>(t.cup_white.size() + odd_w.size()), odd_b) *
             prod_black(odd_b);
        return r;
    }

    // literal slot bookkeeping differs only in the cut over the constraint,
    // handled by the caller; the snake-root product is shared: even blacks
    // on disjoint consecutive pairs, odd blacks on remaining crossings, then
    // halved odd whites (every snake crossing is cup-type)
    bigint snake_root_ways(int n, const insertion_triple& t) {
        if (!t.cup_white.empty()) return 0;
        split_parity(t.white, odd_w, even_w);
        if (!even_w.empty()) return 0;  // even snakes never go into snakes
        split_parity(t.black, odd_b, even_b);
        const int k2 = static_cast<int>(even_b.size());
        bigint r = consecutive_pair_sets(n, k2) * multinomial(k2, even_b) * prod_black(even_b);
        r *= multinomial(n - 2 * k2, odd_b) * prod_black(odd_b);
        r *= multinomial(n - 2 * k2 - static_cast<int>(odd_b.size()), odd_w) *
             prod_white(odd_w, true);
        return r;
    }

    // the order-2 root: odd factors only, at its two cup-type crossings
    bigint cup_root_ways(const insertion_triple& t) {
        if (!t.white.empty()) return 0;
        split_parity(t.black, odd_b, even_b);
        if (!even_b.empty()) return 0;  // an even factor here would swallow the root
        bigint r = multinomial(2, t.cup_white) * prod_white(t.cup_white, true);
        r *= multinomial(2 - static_cast<int>(t.cup_white.size()), odd_b) * prod_black(odd_b);
        return r;
    }
};

}  // namespace

count_tables run_recursion(int max_n, bool literal, const irr_table_t& irr) {
    if (max_n < 1 || max_n > max_table_order)
        throw range_error("count tables bounded by the brute-forced irreducible table");
    count_tables t;
    t.max_n = max_n;
    t.literal = literal;
    t.irr = irr;
    t.m.assign(max_n + 1, 0);
    t.black.assign(max_n + 1, 0);
    t.white.assign(max_n + 1, 0);
    t.proper_black.assign(max_n + 1, 0);
    t.degenerate_black.assign(max_n + 1, 0);

    // seeds: orders 1..3 are not produced by the recursion
    if (max_n >= 1) t.degenerate_black[1] = 1;
    if (max_n >= 2) t.degenerate_black[2] = 1;
    if (max_n >= 3) t.white[3] = 2;

    recursion rec{t.proper_black, t.white, {}, {}, {}, {}};

    for (int N = 4; N <= max_n; ++N) {
        bigint w_total = 0;
        for (int n = 3; n <= N; ++n) {
            const int budget = literal ? n : N - n;
            if (budget % 2) continue;
            bigint acc = 0;
            for (const insertion_triple& tr : insertion_triples(budget, max_n))
                acc += rec.snake_root_ways(n, tr);
            w_total += snake_count(n) * acc;
        }
        t.white[N] = w_total;

        bigint a_total = 0;
        for (int n = 4; n <= N; ++n) {
            const int budget = literal ? n : N - n;
            if (budget % 2) continue;
            const auto row = irr.find(n);
            if (row == irr.end()) continue;
            for (auto [c, cnt] : row->second) {
                if (cnt == 0) continue;
                bigint acc = 0;
                for (const insertion_triple& tr : insertion_triples(budget, max_n))
                    acc += rec.black_root_ways(n, c, tr);
                a_total += bigint(cnt) * acc;
            }
        }
        t.proper_black[N] = a_total;

        if (N % 2 == 0) {
            const int budget = literal ? 2 : N - 2;
            bigint acc = 0;
            for (const insertion_triple& tr : insertion_triples(budget, max_n))
                acc += rec.cup_root_ways(tr);
            t.degenerate_black[N] = acc;
        }
    }
    for (int n = 1; n <= max_n; ++n) {
        t.black[n] = t.proper_black[n] + t.degenerate_black[n];
        t.m[n] = t.black[n] + t.white[n];
    }
    return t;
}

std::vector<bigint> iterated_snakes(int max_n) {
    if (max_n < 1 || max_n > 64) throw range_error("iterated snake bound out of range");
    std::vector<bigint> mi(max_n + 1, 0);
    if (max_n >= 1) mi[1] = 1;
    if (max_n >= 2) mi[2] = 1;
    std::vector<int> odd_parts;
    for (int n = 3; n <= max_n; ++n) {
        const int d = n % 2;
        odd_parts.clear();
        for (int i = 3; i < n; i += 2) odd_parts.push_back(i);
        bigint total = 0;
        for (int r = 1; 2 * r + d <= n; ++r) {
            const int root = 2 * r + d;
            for (const parts_t& mu : budget_partitions(n - root, odd_parts)) {
                bigint term = multinomial(root, mu);
                for (int i : mu) {
                    if (mi[i] % 2 != 0) throw integrity_error("odd snake count not even");
                    term *= mi[i] / 2;
                }
                total += term;
            }
        }
        mi[n] = (1 + d) * total;
    }
    return mi;
}

}  // namespace meander
