#include "meander/perm.hpp"

#include <algorithm>

namespace meander {

namespace {

// arcs (a1,a2),(b1,b2) cross iff one endpoint of each lies strictly inside the other
inline bool crosses(int a1, int a2, int b1, int b2) noexcept {
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace

bool is_permutation(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : seq) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool validate_small(const int* seq, int n) noexcept {
    // incremental check mirroring the enumerator: add arcs in curve order and
    // fail on the first same-side crossing
    int lower[18][2], upper[18][2];
    int nl = 0, nu = 0;
    upper[nu][0] = 0;
    upper[nu][1] = seq[0];
    ++nu;
    for (int k = 1; k <= n; ++k) {
        int a, b;
        bool low;
        if (k < n) {
            a = seq[k - 1];
            b = seq[k];
            low = (k % 2 == 1);
        } else {
            a = seq[n - 1];
            b = n + 1;
            low = (n % 2 == 1);
        }
        if (low) {
            for (int i = 0; i < nl; ++i)
                if (crosses(a, b, lower[i][0], lower[i][1])) return false;
            lower[nl][0] = a;
            lower[nl][1] = b;
            ++nl;
        } else {
            for (int i = 0; i < nu; ++i)
                if (crosses(a, b, upper[i][0], upper[i][1])) return false;
            upper[nu][0] = a;
            upper[nu][1] = b;
            ++nu;
        }
    }
    return true;
}

bool validate(const seq_t& seq) {
    if (!is_permutation(seq)) throw not_permutation_error("not a permutation of {1..n}");
    const int n = static_cast<int>(seq.size());
    if (n == 0) throw not_permutation_error("empty sequence");
    if (n <= 32) return validate_small(seq.data(), n);
    std::vector<std::pair<int, int>> lower, upper;
    lower.reserve(n / 2 + 1);
    upper.reserve(n / 2 + 1);
    upper.emplace_back(0, seq[0]);
    for (int k = 1; k <= n; ++k) {
        const int a = (k < n) ? seq[k - 1] : seq[n - 1];
        const int b = (k < n) ? seq[k] : n + 1;
        const bool low = (k < n) ? (k % 2 == 1) : (n % 2 == 1);
        auto& side = low ? lower : upper;
        for (auto [x, y] : side)
            if (crosses(a, b, x, y)) return false;
        side.emplace_back(a, b);
    }
    return true;
}

bool is_identity(const seq_t& seq) {
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        if (seq[i] != i + 1) return false;
    return true;
}

bool is_reversal(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i)
        if (seq[i] != n - i) return false;
    return true;
}

seq_t reverse_complement(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    seq_t out(n);
    for (int i = 0; i < n; ++i) out[i] = n + 1 - seq[n - 1 - i];
    return out;
}

arch_diagram to_arches(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    arch_diagram d;
    d.n = n;
    for (int i = 0; i + 1 < n; i += 2) d.lower.emplace_back(seq[i], seq[i + 1]);
    for (int i = 1; i + 1 < n; i += 2) d.upper.emplace_back(seq[i], seq[i + 1]);
    d.start_label = seq[0];
    d.finish_label = seq[n - 1];
    d.finish_below = (n % 2 == 1);
    return d;
}

seq_t from_arches(const arch_diagram& d) {
    // follow the curve: lower arc out of crossing 1, upper out of crossing 2, ...
    const int n = d.n;
    std::vector<int> partner_low(n + 1, 0), partner_up(n + 1, 0);
    for (auto [a, b] : d.lower) {
        partner_low[a] = b;
        partner_low[b] = a;
    }
    for (auto [a, b] : d.upper) {
        partner_up[a] = b;
        partner_up[b] = a;
    }
    seq_t out;
    out.reserve(n);
    int cur = d.start_label;
    out.push_back(cur);
    for (int k = 1; k < n; ++k) {
        cur = (k % 2 == 1) ? partner_low[cur] : partner_up[cur];
        if (cur == 0) throw integrity_error("arc walk broke: diagram inconsistent");
        out.push_back(cur);
    }
    return out;
}

}  // namespace meander
