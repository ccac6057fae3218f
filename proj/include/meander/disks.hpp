#pragma once

#include <string>
#include <vector>

#include "meander/perm.hpp"

namespace meander {

// A disk class: the value interval [lo..hi] whose positions in seq are
// contiguous (a common interval of the permutation).
struct disk {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo + 1; }
    friend bool operator==(const disk&, const disk&) = default;
};

// all common intervals of width >= min_width, sorted by (width, lo)
std::vector<disk> disk_classes(const seq_t& seq, int min_width = 1);

// the width-2 classes
std::vector<disk> cups(const seq_t& seq);

// Covering containment over all disk classes: an edge v1 -> v2 whenever
// v1 is strictly inside v2 with no class strictly between.
struct decomposition_graph {
    std::vector<disk> verts;                     // sorted by (width, lo)
    std::vector<std::pair<int, int>> edges;      // (inner, outer) vertex indices
    std::vector<std::vector<int>> adj;           // undirected adjacency
};

decomposition_graph build_graph(const seq_t& seq);

// articulation vertices of the graph with width strictly between 2 and n,
// sorted by (lo, hi)
std::vector<disk> articulation_classes(const seq_t& seq);

// DOT text, vertices grouped rank=same by width
std::string graph_dot(const seq_t& seq);

}  // namespace meander
