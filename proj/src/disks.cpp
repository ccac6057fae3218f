#include "meander/disks.hpp"

#include <algorithm>
#include <sstream>

namespace meander {

std::vector<disk> disk_classes(const seq_t& seq, int min_width) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[seq[i]] = i;
    std::vector<disk> out;
    for (int lo = 1; lo <= n; ++lo) {
        int mn = pos[lo], mx = pos[lo];
        for (int hi = lo; hi <= n; ++hi) {
            mn = std::min(mn, pos[hi]);
            mx = std::max(mx, pos[hi]);
            if (mx - mn == hi - lo && hi - lo + 1 >= min_width) out.push_back({lo, hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const disk& a, const disk& b) {
        return a.width() != b.width() ? a.width() < b.width() : a.lo < b.lo;
    });
    return out;
}

std::vector<disk> cups(const seq_t& seq) {
    std::vector<disk> out;
    for (const disk& d : disk_classes(seq, 2)) {
        if (d.width() > 2) break;
        out.push_back(d);
    }
    return out;
}

decomposition_graph build_graph(const seq_t& seq) {
    decomposition_graph g;
    g.verts = disk_classes(seq, 1);
    const int nv = static_cast<int>(g.verts.size());
    g.adj.resize(nv);
    auto contains = [](const disk& a, const disk& b) {
        return a.lo <= b.lo && b.hi <= a.hi && !(a == b);
    };
    std::vector<int> sups;
    for (int i = 0; i < nv; ++i) {
        sups.clear();
        for (int j = 0; j < nv; ++j)
            if (contains(g.verts[j], g.verts[i])) sups.push_back(j);
        // verts are width-sorted, so sups is width-sorted too; a superset is
        // covering iff none of the smaller supersets sits strictly inside it
        for (std::size_t a = 0; a < sups.size(); ++a) {
            bool covering = true;
            for (std::size_t b = 0; b < a && covering; ++b)
                if (contains(g.verts[sups[a]], g.verts[sups[b]])) covering = false;
            if (covering) {
                g.edges.emplace_back(i, sups[a]);
                g.adj[i].push_back(sups[a]);
                g.adj[sups[a]].push_back(i);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

// iterative Tarjan articulation points on an undirected graph
std::vector<char> articulation_points(const std::vector<std::vector<int>>& adj) {
    const int nv = static_cast<int>(adj.size());
    std::vector<int> pre(nv, -1), low(nv, 0);
    std::vector<char> arts(nv, 0);
    int cnt = 0;
    struct frame {
        int v, parent;
        std::size_t it;
    };
    std::vector<frame> stack;
    for (int root = 0; root < nv; ++root) {
        if (pre[root] != -1) continue;
        int root_children = 0;
        pre[root] = low[root] = cnt++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            frame& f = stack.back();
            bool advanced = false;
            while (f.it < adj[f.v].size()) {
                const int w = adj[f.v][f.it++];
                if (w == f.parent) continue;
                if (pre[w] != -1) {
                    low[f.v] = std::min(low[f.v], pre[w]);
                } else {
                    pre[w] = low[w] = cnt++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                const frame closed = stack.back();
                stack.pop_back();
                if (closed.parent != -1) {
                    low[closed.parent] = std::min(low[closed.parent], low[closed.v]);
                    if (closed.parent != root && low[closed.v] >= pre[closed.parent])
                        arts[closed.parent] = 1;
                }
            }
        }
        if (root_children > 1) arts[root] = 1;
    }
    return arts;
}

}  // namespace

std::vector<disk> articulation_classes(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    const decomposition_graph g = build_graph(seq);
    const std::vector<char> arts = articulation_points(g.adj);
    std::vector<disk> out;
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        const int w = g.verts[i].width();
        if (arts[i] && w > 2 && w < n) out.push_back(g.verts[i]);
    }
    std::sort(out.begin(), out.end(), [](const disk& a, const disk& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    return out;
}

namespace {

std::string vert_name(const disk& d) {
    std::ostringstream os;
    if (d.lo == d.hi)
        os << "[" << d.lo << "]";
    else
        os << "[" << d.lo << ".." << d.hi << "]";
    return os.str();
}

}  // namespace

std::string graph_dot(const seq_t& seq) {
    const decomposition_graph g = build_graph(seq);
    std::ostringstream os;
    os << "digraph decomposition {\n";
    os << "  node [shape=box];\n";
    int width = 0;
    bool open = false;
    for (const disk& d : g.verts) {
        if (d.width() != width) {
            if (open) os << " }\n";
            width = d.width();
            os << "  { rank=same;";
            open = true;
        }
        os << " \"" << vert_name(d) << "\";";
    }
    if (open) os << " }\n";
    for (auto [i, j] : g.edges)
        os << "  \"" << vert_name(g.verts[i]) << "\" -> \"" << vert_name(g.verts[j]) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace meander
