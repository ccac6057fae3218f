#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace meander {

// Crossing sequence of an open meander: seq[k] is the line position (1..n) of
// the (k+1)-th crossing along the curve. Valid iff the induced arc systems
// (including the two virtual escape arcs) are noncrossing on each side.
using seq_t = std::vector<int>;

struct not_permutation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_meander_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct not_disk_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// permutation of {1..n}?
bool is_permutation(const seq_t& seq);

// arch validity; throws not_permutation_error on a non-permutation
bool validate(const seq_t& seq);

// allocation-free variant for hot loops; requires n <= 32 and a permutation
bool validate_small(const int* seq, int n) noexcept;

bool is_identity(const seq_t& seq);
bool is_reversal(const seq_t& seq);

// read backwards with values complemented; an involution preserving validity
seq_t reverse_complement(const seq_t& seq);

// Arc systems of the curve relative to the line. Lower arcs join crossings
// 2i-1,2i along the curve, upper arcs join 2i,2i+1; the dangling ends enter
// at the first crossing from above and leave the last upward (n even) or
// downward (n odd).
struct arch_diagram {
    int n = 0;
    std::vector<std::pair<int, int>> lower;
    std::vector<std::pair<int, int>> upper;
    int start_label = 0;
    int finish_label = 0;
    bool finish_below = false;
};

arch_diagram to_arches(const seq_t& seq);

// walk the arcs back into curve order; inverse of to_arches
seq_t from_arches(const arch_diagram& d);

}  // namespace meander
