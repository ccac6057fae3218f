#include "meander/surgery.hpp"

#include <algorithm>

namespace meander {

std::pair<int, int> block_span(const seq_t& seq, int lo, int hi) {
    const int n = static_cast<int>(seq.size());
    if (lo < 1 || hi > n || lo > hi) throw not_disk_error("value interval out of range");
    int mn = n, mx = -1;
    for (int i = 0; i < n; ++i)
        if (seq[i] >= lo && seq[i] <= hi) {
            mn = std::min(mn, i);
            mx = std::max(mx, i);
        }
    if (mx - mn != hi - lo) throw not_disk_error("value interval is not position-contiguous");
    return {mn, mx};
}

bool frame_left(const seq_t& seq, int lo, int hi) {
    const int n = static_cast<int>(seq.size());
    const int w = hi - lo + 1;
    if (w % 2 == 1) return true;
    const auto [p, q] = block_span(seq, lo, hi);
    const int ein = p > 0 ? seq[p - 1] : 0;           // 0 marks the far-left entry
    const int eout = q + 1 < n ? seq[q + 1] : n + 1;  // n+1 the far-right exit
    if (ein < lo && eout > hi) return true;
    if (ein > hi && eout < lo) return false;
    return ein > eout;  // both stubs on one side: nesting decides
}

seq_t pattern_of(const seq_t& seq, int lo, int hi) {
    const auto [p, q] = block_span(seq, lo, hi);
    const int w = hi - lo + 1;
    seq_t out(seq.begin() + p, seq.begin() + q + 1);
    for (int& v : out) v -= lo - 1;
    if (!frame_left(seq, lo, hi))
        for (int& v : out) v = w + 1 - v;
    return out;
}

seq_t cut(const seq_t& seq, int lo, int hi) {
    const int n = static_cast<int>(seq.size());
    const int w = hi - lo + 1;
    const auto [p, q] = block_span(seq, lo, hi);
    const int shift = (w % 2 == 1) ? w - 1 : w - 2;
    int rep[2];
    int nrep;
    if (w % 2 == 1) {
        rep[0] = lo;
        nrep = 1;
    } else {
        const bool left = frame_left(seq, lo, hi);
        rep[0] = left ? lo : lo + 1;
        rep[1] = left ? lo + 1 : lo;
        nrep = 2;
    }
    seq_t out;
    out.reserve(n - w + nrep);
    for (int i = 0; i < n; ++i) {
        if (i == p) {
            out.insert(out.end(), rep, rep + nrep);
        } else if (i > p && i <= q) {
            continue;
        } else {
            out.push_back(seq[i] > hi ? seq[i] - shift : seq[i]);
        }
    }
    return out;
}

seq_t insert(const seq_t& host, int lo, int hi, const seq_t& guest) {
    const int n = static_cast<int>(host.size());
    const int m = static_cast<int>(guest.size());
    const int w = hi - lo + 1;
    if (w != 1 && w != 2) throw not_disk_error("insertion disk must have width 1 or 2");
    if ((m - w) % 2 != 0) throw parity_error("guest order parity must match the disk width");
    const auto [p, q] = block_span(host, lo, hi);
    seq_t g = guest;
    if (w == 2 && !frame_left(host, lo, hi))
        for (int& v : g) v = m + 1 - v;
    const int shift = m - w;
    seq_t out;
    out.reserve(n - w + m);
    for (int i = 0; i < n; ++i) {
        if (i == p) {
            for (int v : g) out.push_back(lo - 1 + v);
        } else if (i > p && i <= q) {
            continue;
        } else {
            out.push_back(host[i] > hi ? host[i] + shift : host[i]);
        }
    }
    return out;
}

}  // namespace meander
